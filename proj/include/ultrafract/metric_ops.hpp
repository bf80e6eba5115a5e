#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "ultrafract/metric_space.hpp"

namespace ufract {

template <class T>
struct TripleWitness {
  std::size_t i, j, k;
};

// Strong triangle inequality d(i,k) <= max(d(i,j), d(j,k)) + tol on all triples.
// Rejects matrices that fail the metric axioms.
template <class T>
bool is_ultrametric(const FiniteMetricSpace<T>& space, const T& tol,
                    std::optional<TripleWitness<T>>* witness = nullptr) {
  if (auto v = space.validate(tol)) throw std::invalid_argument("is_ultrametric: not a metric: " + v->kind);
  std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const T& a = space.at(i, j);
        const T& b = space.at(j, k);
        const T& m = a > b ? a : b;
        if (space.at(i, k) > m + tol) {
          if (witness) *witness = TripleWitness<T>{i, j, k};
          return false;
        }
      }
  return true;
}

struct SnowflakeReport {
  bool metric_ok = true;
  std::vector<std::array<std::size_t, 3>> triangle_violations;
};

// Entrywise d^alpha, alpha in (0,1].  Always an ultrametric when the input is;
// for general inputs the triangle inequality is re-checked and violations reported.
inline FiniteMetricSpace<double> snowflake(const FiniteMetricSpace<double>& space, double alpha,
                                           double tol = 1e-12, SnowflakeReport* report = nullptr) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("snowflake: alpha must be in (0,1]");
  std::size_t n = space.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = std::pow(space.at(i, j), alpha);
  FiniteMetricSpace<double> out(space.labels(), std::move(d));
  if (report) {
    report->metric_ok = true;
    report->triangle_violations.clear();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (out.at(i, k) > out.at(i, j) + out.at(j, k) + tol) {
            report->metric_ok = false;
            report->triangle_violations.push_back({i, j, k});
          }
  }
  return out;
}

inline double euclid(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).norm(); }

// max(sup_a dist(a,B), sup_b dist(b,A)) under the Euclidean metric.
inline double hausdorff_distance(const PointSet& a, const PointSet& b) {
  a.require_nonempty();
  b.require_nonempty();
  if (a.dim() != b.dim()) throw std::invalid_argument("hausdorff_distance: dimension mismatch");
  auto directed = [](const PointSet& from, const PointSet& to) {
    double worst = 0.0;
    for (const auto& p : from.points) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to.points) best = std::min(best, euclid(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

// Exact one-dimensional variant used by the rational backends.
inline Rational hausdorff_distance_1d(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff_distance_1d: empty set");
  auto directed = [](const std::vector<Rational>& from, const std::vector<Rational>& to) {
    Rational worst(0);
    for (const auto& p : from) {
      bool first = true;
      Rational best(0);
      for (const auto& q : to) {
        Rational d = p > q ? p - q : q - p;
        if (first || d < best) { best = d; first = false; }
      }
      if (best > worst) worst = best;
    }
    return worst;
  };
  Rational ab = directed(a, b), ba = directed(b, a);
  return ab > ba ? ab : ba;
}

}  // namespace ufract
