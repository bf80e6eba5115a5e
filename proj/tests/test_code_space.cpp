#include <doctest.h>

#include "ultrafract/code_space.hpp"
#include "ultrafract/exkam.hpp"
#include "ultrafract/kameyama.hpp"
#include "ultrafract/semantics_product.hpp"
#include "ultrafract/ultrafractal.hpp"

using namespace ufract;

TEST_CASE("compose: plane example words") {
  Ifs sys = exkam_ifs();
  // (f1, f2): z -> c z / 4
  ComposedCylinder c = compose(sys, AddressWord{{0, 1}});
  std::complex<double> cc = std::polar(1.0, 1.0);
  CHECK(c.map.matrix()(0, 0) == doctest::Approx(0.25 * cc.real()));
  CHECK(c.map.matrix()(1, 0) == doctest::Approx(0.25 * cc.imag()));
  CHECK(c.kind == ComposedCylinder::ImageKind::Symbolic);

  ComposedCylinder id = compose(sys, AddressWord{});
  CHECK(id.kind == ComposedCylinder::ImageKind::FullImage);
  CHECK(id.map.matrix() == Eigen::MatrixXd::Identity(2, 2));

  // anything after the constant map stays constant
  for (AddressWord w : {AddressWord{{2, 0}}, AddressWord{{0, 2}}, AddressWord{{1, 2, 0}}}) {
    ComposedCylinder k = compose(sys, w);
    CHECK(k.kind == ComposedCylinder::ImageKind::Singleton);
  }
}

TEST_CASE("order_of: scaling pins the order of plane example words") {
  Ifs sys = exkam_ifs();
  auto r = order_of(sys, AddressWord{{0, 0, 1}}, 6);
  REQUIRE(r.order.has_value());
  CHECK(*r.order == 3);
  CHECK(r.exact);

  auto f3 = order_of(sys, AddressWord{{2}}, 4);
  CHECK_FALSE(f3.order.has_value());  // omega
  CHECK(f3.exact);

  auto id = order_of(sys, AddressWord{}, 3);
  REQUIRE(id.order.has_value());
  CHECK(*id.order == 0);

  // never below |w|
  for (int depth = 3; depth <= 5; ++depth) {
    auto rr = order_of(sys, AddressWord{{0, 1}}, depth);
    REQUIRE(rr.order.has_value());
    CHECK(*rr.order >= 2);
  }
}

TEST_CASE("exact plane-example lattice: X containment table and witness") {
  ExkamSemantics sem;
  CylinderLattice<ExkamSemantics> lat(sem, 4);

  // X_{m,j} subset X_{m',j'} iff m >= m', j >= j', j-j' <= m-m'
  ExkamSemantics::Desc x21{false, 2, 1}, x10{false, 1, 0}, x11{false, 1, 1};
  CHECK(sem.relate(x21, x10) == Relation::Subset);
  CHECK(sem.relate(x21, x11) == Relation::Subset);
  CHECK(sem.relate(x10, x11) == Relation::ProperOverlap);
  CHECK(sem.relate(x10, x10) == Relation::Equal);

  auto verdict = is_ultrafractal(lat);
  CHECK(verdict.status == UltraVerdict::Status::No);
  REQUIRE(verdict.witness.has_value());
  // the overlap witness is the pair f1(X), f2(X)
  auto [wa, wb] = *verdict.witness;
  CHECK(wa.size() + wb.size() == 2);
}

TEST_CASE("identical words are equal; orders never fall below word length") {
  ExkamSemantics sem;
  CylinderLattice<ExkamSemantics> lat(sem, 5);
  int a = lat.node_of_word(AddressWord{{0, 1, 0}});
  int b = lat.node_of_word(AddressWord{{0, 1, 0}});
  CHECK(a == b);
  for (std::size_t i = 0; i < lat.node_count(); ++i) {
    auto o = lat.order(i);
    if (o) CHECK(*o >= lat.node(i).min_len);
  }
}

TEST_CASE("cantor lattice: same-length cylinders disjoint, verdict yes") {
  AffineSemantics sem(cantor_ifs());
  CylinderLattice<AffineSemantics> lat(sem, 3);
  CHECK(lat.unknown_relation_count() == 0);
  for (std::size_t i = 0; i < lat.node_count(); ++i)
    for (std::size_t j = i + 1; j < lat.node_count(); ++j) {
      const auto& a = lat.node(i);
      const auto& b = lat.node(j);
      if (a.min_len == b.min_len && a.min_len > 0) CHECK(lat.relation(i, j) == Relation::Disjoint);
    }
  CHECK(is_ultrafractal(lat).status == UltraVerdict::Status::Yes);
  CHECK(is_strict_ultrafractal(lat).status == UltraVerdict::Status::Yes);
}

TEST_CASE("single-map system is an ultrafractal (nested chain)") {
  Eigen::MatrixXd a(1, 1);
  a << 0.5;
  Eigen::VectorXd b(1);
  b << 0.25;
  AffineSemantics sem(Ifs({AffineContraction(a, b)}));
  CylinderLattice<AffineSemantics> lat(sem, 4);
  CHECK(is_ultrafractal(lat).status == UltraVerdict::Status::Yes);
}

TEST_CASE("overlapping pair system fails strictness with a witness") {
  Eigen::MatrixXd a(1, 1);
  a << 0.5;
  Eigen::VectorXd b0(1), b1(1);
  b0 << 0.0;
  b1 << 0.5;
  AffineSemantics sem(Ifs({AffineContraction(a, b0), AffineContraction(a, b1)}));
  CylinderLattice<AffineSemantics> lat(sem, 3);
  auto verdict = is_strict_ultrafractal(lat);
  CHECK(verdict.status == UltraVerdict::Status::No);
  CHECK(verdict.witness.has_value());
}

TEST_CASE("every strict ultrafractal is an ultrafractal (tested systems)") {
  {
    AffineSemantics sem(cantor_ifs());
    CylinderLattice<AffineSemantics> lat(sem, 4);
    if (is_strict_ultrafractal(lat).status == UltraVerdict::Status::Yes)
      CHECK(is_ultrafractal(lat).status == UltraVerdict::Status::Yes);
  }
  {
    ProductSemantics sem(cantor_maps_1d(), 2);
    CylinderLattice<ProductSemantics> lat(sem, 4);
    if (is_strict_ultrafractal(lat).status == UltraVerdict::Status::Yes)
      CHECK(is_ultrafractal(lat).status == UltraVerdict::Status::Yes);
  }
}

TEST_CASE("lattice subset relation is transitive and antisymmetric") {
  ExkamSemantics sem;
  CylinderLattice<ExkamSemantics> lat(sem, 4);
  std::size_t m = lat.node_count();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (lat.relation(i, j) != Relation::Subset) continue;
      CHECK(lat.relation(j, i) == Relation::Superset);
      for (std::size_t k = 0; k < m; ++k)
        if (lat.relation(j, k) == Relation::Subset)
          CHECK((lat.relation(i, k) == Relation::Subset || lat.relation(i, k) == Relation::Equal));
    }
}

TEST_CASE("product structure: cantor times a two-point factor") {
  Ifs cantor = cantor_ifs();
  auto maps = product_structure(cantor, 2);
  REQUIRE(maps.size() == 3);

  // attractor approximation of the product vs the explicit product set
  std::vector<std::function<Eigen::VectorXd(const Eigen::VectorXd&)>> fns;
  for (const auto& g : maps) fns.emplace_back([&g](const Eigen::VectorXd& x) { return g.apply(x); });
  PointSet seed;
  Eigen::VectorXd s(2);
  s << 0, 0;
  seed.points = {s};
  PointSet approx = iterate_maps(fns, seed, 14);

  PointSet expected;
  std::vector<Rational> k = {Rational(0), Rational(1)};
  auto maps1d = cantor_maps_1d();
  for (int i = 0; i < 10; ++i) k = hutchinson_step_1d(maps1d, k);
  for (const auto& x : k)
    for (int level : {0, 1}) {
      Eigen::VectorXd p(2);
      p << to_double(x), static_cast<double>(level);
      expected.points.push_back(p);
    }
  CHECK(hausdorff_distance(approx, expected) < 2e-4);

  // strictness of the exact product lattice at depth 4
  ProductSemantics sem(maps1d, 2);
  CylinderLattice<ProductSemantics> lat(sem, 4);
  CHECK(is_strict_ultrafractal(lat).status == UltraVerdict::Status::Yes);
  CHECK(is_ultrafractal(lat).status == UltraVerdict::Status::Yes);

  // n = 1 keeps the base system (lifted to a constant level)
  auto trivial = product_structure(cantor, 1);
  CHECK(trivial.size() == cantor.size());
}

TEST_CASE("product structure rejects overlapping images") {
  Eigen::MatrixXd a(1, 1);
  a << 0.5;
  Eigen::VectorXd b0(1), b1(1);
  b0 << 0.0;
  b1 << 0.5;
  Ifs overlapping({AffineContraction(a, b0), AffineContraction(a, b1)});
  CHECK_THROWS(product_structure(overlapping, 2));
}
