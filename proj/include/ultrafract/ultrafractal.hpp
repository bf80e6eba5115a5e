#pragma once

#include <optional>

#include "ultrafract/affine.hpp"
#include "ultrafract/cylinder.hpp"
#include "ultrafract/ifs_ops.hpp"

namespace ufract {

struct UltraVerdict {
  enum class Status { Yes, No, Unknown } status = Status::Yes;
  std::optional<std::pair<AddressWord, AddressWord>> witness;
  std::size_t unknown_pairs = 0;
  int depth = 0;
};

inline const char* to_string(UltraVerdict::Status s) {
  switch (s) {
    case UltraVerdict::Status::Yes: return "yes-at-depth";
    case UltraVerdict::Status::No: return "no";
    default: return "unknown";
  }
}

// Every pair of cylinder images is nested or disjoint.
template <class Sem>
UltraVerdict is_ultrafractal(const CylinderLattice<Sem>& lat) {
  UltraVerdict v;
  v.depth = lat.depth();
  std::size_t m = lat.node_count();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Relation r = lat.relation(i, j);
      if (r == Relation::ProperOverlap) {
        v.status = UltraVerdict::Status::No;
        v.witness = {lat.node(i).witness, lat.node(j).witness};
        return v;
      }
      if (r == Relation::Unknown) ++v.unknown_pairs;
    }
  if (v.unknown_pairs > 0) v.status = UltraVerdict::Status::Unknown;
  return v;
}

// For every k <= depth and same-length pair: equal, disjoint, or one image is
// a singleton.
template <class Sem>
UltraVerdict is_strict_ultrafractal(const CylinderLattice<Sem>& lat) {
  UltraVerdict v;
  v.depth = lat.depth();
  std::size_t m = lat.node_count();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& a = lat.node(i);
      const auto& b = lat.node(j);
      bool share_length = false;
      for (int k = 0; k <= lat.depth() && !share_length; ++k)
        share_length = a.at_length[static_cast<std::size_t>(k)] && b.at_length[static_cast<std::size_t>(k)];
      if (!share_length) continue;
      if (lat.semantics().is_singleton(a.desc) || lat.semantics().is_singleton(b.desc)) continue;
      Relation r = lat.relation(i, j);
      if (r == Relation::Equal || r == Relation::Disjoint) continue;
      if (r == Relation::Unknown) {
        ++v.unknown_pairs;
        continue;
      }
      v.status = UltraVerdict::Status::No;
      v.witness = {a.witness, b.witness};
      return v;
    }
  if (v.unknown_pairs > 0) v.status = UltraVerdict::Status::Unknown;
  return v;
}

// Product with a finite discrete factor of size n, realized as levels
// 0..n-1 on an extra coordinate.  g_0 shifts levels up (top level collapses
// to (fix(f_0), top)); g_i acts by f_i on level 0 and collapses the other
// levels to (fix(f_i), 0).  Requires the base images pairwise disjoint.
inline std::vector<GuardedAffineMap> product_structure(const Ifs& base, int n,
                                                       double guard_slack = 0.25) {
  if (n < 1) throw std::invalid_argument("product_structure: n must be >= 1");
  int d = base.dim();
  auto lift = [&](const AffineContraction& f, double level_scale, double level_shift) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(d + 1, d + 1);
    A.topLeftCorner(d, d) = f.matrix();
    A(d, d) = level_scale;
    Eigen::VectorXd b(d + 1);
    b.head(d) = f.offset();
    b(d) = level_shift;
    return AffineContraction(A, b);
  };
  auto constant_map = [&](const Eigen::VectorXd& target, double level) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(d + 1, d + 1);
    Eigen::VectorXd b(d + 1);
    b.head(d) = target;
    b(d) = level;
    return AffineContraction(A, b);
  };

  // precondition: the base images are pairwise disjoint; certify with the
  // sample-cloud gap against the approximation certificate
  if (base.size() > 1) {
    PointSet seed;
    for (const auto& f : base.maps()) seed.points.push_back(fixed_point(f));
    AttractorApprox approx = attractor_approx(base, seed, 8);
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        double gap = std::numeric_limits<double>::infinity();
        for (const auto& p : approx.points.points)
          for (const auto& q : approx.points.points)
            gap = std::min(gap, (base.map(i).apply(p) - base.map(j).apply(q)).norm());
        double dilation = (base.map(i).lip() + base.map(j).lip()) * approx.certificate;
        if (gap <= dilation)
          throw std::invalid_argument("product_structure: base images are not certifiably disjoint");
      }
  }

  std::vector<GuardedAffineMap> out;
  if (n == 1) {
    // nothing to do for a one-point factor: the base maps, lifted to level 0
    for (const auto& f : base.maps())
      out.emplace_back(std::vector<GuardedAffineMap::Piece>{{-guard_slack, guard_slack, lift(f, 0.0, 0.0)}});
    return out;
  }

  // g_0: level j -> j+1 for j < n-1, level n-1 -> (fix(f_0), n-1)
  {
    std::vector<GuardedAffineMap::Piece> pieces;
    pieces.push_back({-guard_slack, static_cast<double>(n - 2) + guard_slack,
                      lift(AffineContraction::identity(d), 1.0, 1.0)});
    pieces.push_back({static_cast<double>(n - 1) - guard_slack, static_cast<double>(n - 1) + guard_slack,
                      constant_map(fixed_point(base.map(0)), static_cast<double>(n - 1))});
    out.emplace_back(std::move(pieces));
  }
  // g_i: (f_i(x), 0) on level 0, constant (fix(f_i), 0) elsewhere
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::vector<GuardedAffineMap::Piece> pieces;
    pieces.push_back({-guard_slack, guard_slack, lift(base.map(i), 0.0, 0.0)});
    pieces.push_back({1.0 - guard_slack, static_cast<double>(n - 1) + guard_slack,
                      constant_map(fixed_point(base.map(i)), 0.0)});
    out.emplace_back(std::move(pieces));
  }
  return out;
}

}  // namespace ufract
