#pragma once

#include <algorithm>
#include <functional>
#include <random>

#include "ultrafract/affine.hpp"
#include "ultrafract/metric_ops.hpp"

namespace ufract {

// Fixed point via (I - A) x = b, falling back to Banach iteration from 0.
inline Eigen::VectorXd fixed_point(const AffineContraction& f, double tol = 1e-12) {
  int d = f.dim();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d) - f.matrix();
  Eigen::VectorXd p = m.colPivHouseholderQr().solve(f.offset());
  if ((f.apply(p) - p).norm() <= tol) return p;
  p = Eigen::VectorXd::Zero(d);
  for (int it = 0; it < 100000; ++it) {
    Eigen::VectorXd q = f.apply(p);
    if ((q - p).norm() <= tol) return q;
    p = std::move(q);
  }
  return p;  // contraction guarantees we never get here with lip < 1
}

namespace detail {

inline void sort_points(std::vector<Eigen::VectorXd>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    for (int i = 0; i < a.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (a(i) > b(i)) return false;
    }
    return false;
  });
}

}  // namespace detail

// Deduplicate within radius; points are first sorted so the result is
// independent of input order.
inline PointSet dedup(const PointSet& in, double radius) {
  PointSet out;
  std::vector<Eigen::VectorXd> pts = in.points;
  detail::sort_points(pts);
  for (const auto& p : pts) {
    bool dup = false;
    for (auto it = out.points.rbegin(); it != out.points.rend(); ++it) {
      if ((*it - p).norm() <= radius) { dup = true; break; }
      // sorted order: once the first coordinate is too far back, stop scanning
      if (p(0) - (*it)(0) > radius) break;
    }
    if (!dup) out.points.push_back(p);
  }
  return out;
}

// Union of images under all maps, deduplicated within tolerance.
inline PointSet hutchinson_step(const Ifs& ifs, const PointSet& k, double dedup_radius = 0.0) {
  k.require_nonempty();
  PointSet out;
  out.points.reserve(k.size() * ifs.size());
  for (const auto& f : ifs.maps())
    for (const auto& p : k.points) out.points.push_back(f.apply(p));
  return dedup(out, dedup_radius);
}

struct AttractorApprox {
  PointSet points;
  double certificate = 0.0;   // Hausdorff bound to the true attractor
  bool truncated = false;     // point cap hit; result still inside the attractor body
  std::vector<double> gaps;   // h(K_i, K_{i+1}) for i < n
};

// n-fold Hutchinson iterate with the Banach error certificate
// h(K_n, K) <= lip^n h(K_0, K_1) / (1 - lip).
inline AttractorApprox attractor_approx(const Ifs& ifs, const PointSet& seed, int n,
                                        std::size_t point_cap = 2'000'000) {
  seed.require_nonempty();
  if (n < 0) throw std::invalid_argument("attractor_approx: n must be >= 0");
  AttractorApprox out;
  out.points = seed;
  double lip = ifs.lip();
  double h01 = hausdorff_distance(seed, hutchinson_step(ifs, seed));
  double limit_gap = lip < 1.0 ? h01 / (1.0 - lip) : h01;
  for (int i = 0; i < n; ++i) {
    double cert_next = std::pow(lip, i + 1) * limit_gap;
    double radius = cert_next / 4.0;
    PointSet next = hutchinson_step(ifs, out.points, radius);
    if (next.size() > point_cap) {
      out.truncated = true;
      break;
    }
    out.gaps.push_back(hausdorff_distance(out.points, next));
    out.points = std::move(next);
    out.certificate = cert_next;
  }
  if (n == 0) out.certificate = limit_gap;
  return out;
}

// Random-orbit sampling; deterministic for a fixed seed, burn-in discarded.
inline PointSet chaos_game(const Ifs& ifs, const Eigen::VectorXd& start, int iterations,
                           std::uint64_t seed, int burn_in = 32) {
  if (iterations < 1) throw std::invalid_argument("chaos_game: iterations must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, ifs.size() - 1);
  Eigen::VectorXd x = start;
  for (int i = 0; i < burn_in; ++i) x = ifs.map(pick(rng)).apply(x);
  PointSet out;
  out.points.reserve(static_cast<std::size_t>(iterations));
  for (int i = 0; i < iterations; ++i) {
    x = ifs.map(pick(rng)).apply(x);
    out.points.push_back(x);
  }
  return out;
}

// Point-cloud iteration for arbitrary self-maps of R^d (conjugated systems,
// guarded-affine products).
inline PointSet iterate_maps(const std::vector<std::function<Eigen::VectorXd(const Eigen::VectorXd&)>>& maps,
                             const PointSet& seed, int n, double dedup_radius = 0.0) {
  seed.require_nonempty();
  PointSet cur = seed;
  for (int i = 0; i < n; ++i) {
    PointSet next;
    next.points.reserve(cur.size() * maps.size());
    for (const auto& f : maps)
      for (const auto& p : cur.points) next.points.push_back(f(p));
    cur = dedup(next, dedup_radius);
  }
  return cur;
}

// Exact 1-D Hutchinson iteration over rationals.
inline std::vector<Rational> hutchinson_step_1d(const std::vector<RationalAffine1D>& maps,
                                                const std::vector<Rational>& k) {
  std::vector<Rational> out;
  out.reserve(maps.size() * k.size());
  for (const auto& f : maps)
    for (const auto& x : k) out.push_back(f.apply(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ufract
