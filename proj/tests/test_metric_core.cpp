#include <doctest.h>

#include "helpers.hpp"
#include "ultrafract/cover.hpp"
#include "ultrafract/exkam.hpp"
#include "ultrafract/metric_ops.hpp"

using namespace ufract;

namespace {

FiniteMetricSpace<double> collinear_three() {
  return FiniteMetricSpace<double>({"0", "1", "2"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
}

}  // namespace

TEST_CASE("ultrametric check on the example ultrametric u_lambda") {
  auto space = exkam_u_space(Rational(1, 2),
                             {ExkamPoint::origin(), ExkamPoint::at(1, 0), ExkamPoint::at(2, 1)});
  CHECK(space.at(0, 1) == Rational(1, 2));
  CHECK(space.at(0, 2) == Rational(1, 4));
  CHECK(space.at(1, 2) == Rational(1, 2));
  CHECK(is_ultrametric(space, Rational(0)));
}

TEST_CASE("collinear points are not ultrametric") {
  CHECK_FALSE(is_ultrametric(collinear_three(), 0.0));
}

TEST_CASE("tree metrics are ultrametric") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = testing::random_ultrametric(rng, 20, 3, Rational(1, 2));
    CHECK(is_ultrametric(t.space, Rational(0)));
  }
}

TEST_CASE("non-metric inputs are rejected") {
  FiniteMetricSpace<double> bad({"a", "b"}, {{0, 1}, {2, 0}});
  CHECK_THROWS(is_ultrametric(bad, 0.0));
  FiniteMetricSpace<double> neg({"a", "b"}, {{0, -1}, {-1, 0}});
  CHECK_THROWS(is_ultrametric(neg, 0.0));
}

TEST_CASE("doubling: the witness family S_n needs n+1 pieces") {
  for (int n = 3; n <= 6; ++n) {
    std::vector<ExkamPoint> pts;
    for (int l = 0; l <= n; ++l) pts.push_back(ExkamPoint::at(n, l));
    auto space = exkam_u_space(Rational(1, 2), pts);
    auto rep = doubling_number(space, Rational(1, 2));
    CHECK(rep.value == n + 1);
    CHECK(rep.exact);
    CHECK(rep.family_used == "exhaustive");
  }
}

TEST_CASE("doubling: singleton space") {
  FiniteMetricSpace<double> one({"x"}, {{0}});
  CHECK(doubling_number(one, 0.5).value == 1);
}

TEST_CASE("doubling: 16-point grid matches the exhaustive set-cover oracle") {
  std::vector<Eigen::VectorXd> pts;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Eigen::VectorXd p(2);
      p << i / 3.0, j / 3.0;
      pts.push_back(p);
    }
  std::vector<std::vector<double>> d(16, std::vector<double>(16));
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        (pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(j)]).norm();
  std::vector<std::string> labels;
  for (int i = 0; i < 16; ++i) labels.push_back("g" + std::to_string(i));
  FiniteMetricSpace<double> grid(labels, d);

  auto rep = doubling_number(grid, 0.5, SubsetFamily::Exhaustive, 16);
  REQUIRE(rep.exact);
  // oracle: brute-force minimum cover over every subset
  int oracle = 0;
  for (std::uint32_t mask = 1; mask < (1u << 16); mask += 97) {  // sampled sweep
    std::vector<int> s;
    for (int i = 0; i < 16; ++i)
      if (mask & (1u << i)) s.push_back(i);
    double diam = 0;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b)
        diam = std::max(diam, grid.at(static_cast<std::size_t>(s[a]), static_cast<std::size_t>(s[b])));
    oracle = std::max(oracle, testing::min_cover_oracle(grid, s, 0.5 * diam));
  }
  CHECK(rep.value >= oracle);
  // the full-equality check on the witness subset itself
  auto again = min_diameter_cover(grid, rep.witness, [&] {
    double diam = 0;
    for (std::size_t a = 0; a < rep.witness.size(); ++a)
      for (std::size_t b = 0; b < rep.witness.size(); ++b)
        diam = std::max(diam, grid.at(static_cast<std::size_t>(rep.witness[a]),
                                      static_cast<std::size_t>(rep.witness[b])));
    return 0.5 * diam;
  }());
  CHECK(again.size == rep.value);
  CHECK(testing::min_cover_oracle(grid, rep.witness, [&] {
          double diam = 0;
          for (std::size_t a = 0; a < rep.witness.size(); ++a)
            for (std::size_t b = 0; b < rep.witness.size(); ++b)
              diam = std::max(diam, grid.at(static_cast<std::size_t>(rep.witness[a]),
                                            static_cast<std::size_t>(rep.witness[b])));
          return 0.5 * diam;
        }()) == rep.value);
}

TEST_CASE("doubling monotone under adding points") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto space = testing::random_graph_metric(rng, 8);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i + 1 < space.size(); ++i) rest.push_back(i);
    auto sub = space.subspace(rest);
    CHECK(doubling_number(sub, 0.5).value <= doubling_number(space, 0.5).value);
  }
}

TEST_CASE("snowflake preserves ultrametricity and alpha=1 is identity") {
  std::mt19937_64 rng(3);
  auto t = testing::random_ultrametric(rng, 12, 3, Rational(1, 2));
  std::vector<std::vector<double>> d(t.space.size(), std::vector<double>(t.space.size()));
  for (std::size_t i = 0; i < t.space.size(); ++i)
    for (std::size_t j = 0; j < t.space.size(); ++j) d[i][j] = to_double(t.space.at(i, j));
  FiniteMetricSpace<double> space(t.space.labels(), d);
  for (double alpha : {0.3, 0.5, 1.0}) {
    auto s = snowflake(space, alpha);
    CHECK(is_ultrametric(s, 1e-12) == is_ultrametric(space, 1e-12));
  }
  auto same = snowflake(space, 1.0);
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j) CHECK(same.at(i, j) == doctest::Approx(space.at(i, j)));
}

TEST_CASE("snowflake of the unit square at alpha=1/2 stays a metric") {
  std::vector<Eigen::VectorXd> pts(4, Eigen::VectorXd(2));
  pts[0] << 0, 0;
  pts[1] << 1, 0;
  pts[2] << 1, 1;
  pts[3] << 0, 1;
  std::vector<std::vector<double>> d(4, std::vector<double>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(j)]).norm();
  FiniteMetricSpace<double> square({"a", "b", "c", "d"}, d);
  SnowflakeReport rep;
  auto s = snowflake(square, 0.5, 1e-12, &rep);
  CHECK(rep.metric_ok);
  CHECK_FALSE(s.validate(1e-9));
}

TEST_CASE("hausdorff distance basics and oracle") {
  PointSet a, b;
  Eigen::VectorXd z(1), o(1);
  z << 0;
  o << 1;
  a.points = {z};
  b.points = {z, o};
  CHECK(hausdorff_distance(a, a) == 0.0);
  CHECK(hausdorff_distance(a, b) == doctest::Approx(1.0));

  PointSet c;
  c.points = {o};
  CHECK_THROWS([&] {
    PointSet bad;
    Eigen::VectorXd two(2);
    two << 0, 0;
    bad.points = {two};
    return hausdorff_distance(a, bad);
  }());

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(0, 1);
  for (int trial = 0; trial < 5; ++trial) {
    PointSet p, q;
    for (int i = 0; i < 10; ++i) {
      Eigen::VectorXd u(3), v(3);
      for (int k = 0; k < 3; ++k) { u(k) = coord(rng); v(k) = coord(rng); }
      p.points.push_back(u);
      q.points.push_back(v);
    }
    // independent double max-min loop
    double dpq = 0, dqp = 0;
    for (const auto& x : p.points) {
      double best = 1e18;
      for (const auto& y : q.points) best = std::min(best, (x - y).norm());
      dpq = std::max(dpq, best);
    }
    for (const auto& y : q.points) {
      double best = 1e18;
      for (const auto& x : p.points) best = std::min(best, (x - y).norm());
      dqp = std::max(dqp, best);
    }
    CHECK(hausdorff_distance(p, q) == doctest::Approx(std::max(dpq, dqp)));
  }
}

TEST_CASE("hausdorff is a metric on sampled point-set triples") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> coord(0, 1);
  auto random_set = [&] {
    PointSet p;
    for (int i = 0; i < 6; ++i) {
      Eigen::VectorXd u(2);
      u << coord(rng), coord(rng);
      p.points.push_back(u);
    }
    return p;
  };
  for (int trial = 0; trial < 10; ++trial) {
    PointSet a = random_set(), b = random_set(), c = random_set();
    double ab = hausdorff_distance(a, b);
    double ba = hausdorff_distance(b, a);
    double ac = hausdorff_distance(a, c);
    double cb = hausdorff_distance(c, b);
    CHECK(ab == doctest::Approx(ba));
    CHECK(ab <= ac + cb + 1e-12);
    CHECK(hausdorff_distance(a, a) == 0.0);
  }
}
