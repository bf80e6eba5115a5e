#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "ultrafract/affine.hpp"
#include "ultrafract/cylinder.hpp"
#include "ultrafract/metric_space.hpp"

namespace ufract {

// The three-map plane system f1(z) = z/2, f2(z) = cz/2, f3(z) = 1 with |c| = 1
// and c^n != 1.  Attractor points x_{n,k} = c^k / 2^n, 0 <= k <= n, plus 0.
// The exact backend below works on the (n, k) indices, never on floats.

struct ExkamPoint {
  bool zero = true;
  int n = 0, k = 0;

  static ExkamPoint origin() { return {}; }
  static ExkamPoint at(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("ExkamPoint: need 0 <= k <= n");
    return {false, n, k};
  }
  friend bool operator==(const ExkamPoint&, const ExkamPoint&) = default;
};

// u_lambda(0, x_{n,l}) = lambda^n; u_lambda(x_{n,l}, x_{m,q}) = max for
// distinct points.
inline Rational exkam_u(const Rational& lambda, const ExkamPoint& a, const ExkamPoint& b) {
  if (!(lambda > 0 && lambda < 1)) throw std::invalid_argument("exkam_u: lambda must be in (0,1)");
  if (a == b) return Rational(0);
  if (a.zero) return rational_pow(lambda, b.n);
  if (b.zero) return rational_pow(lambda, a.n);
  Rational pa = rational_pow(lambda, a.n), pb = rational_pow(lambda, b.n);
  return pa > pb ? pa : pb;
}

struct ExkamBracket {
  Rational lower, upper;
  bool exact() const { return lower == upper; }
};

// Exact value lambda^n against 0; the displayed bracket
// [max(lambda^n, lambda^m), lambda^n + lambda^m] for two distinct nonzero points.
inline ExkamBracket exkam_p(const Rational& lambda, const ExkamPoint& a, const ExkamPoint& b) {
  if (!(lambda > 0 && lambda < 1)) throw std::invalid_argument("exkam_p: lambda must be in (0,1)");
  if (a == b) return {Rational(0), Rational(0)};
  if (a.zero || b.zero) {
    Rational v = rational_pow(lambda, a.zero ? b.n : a.n);
    return {v, v};
  }
  Rational pa = rational_pow(lambda, a.n), pb = rational_pow(lambda, b.n);
  return {pa > pb ? pa : pb, pa + pb};
}

// Exact cylinder semantics.  Images of compositions are either
// X_{m,j} = {0} u {x_{m+n,k+j} : 0 <= k <= n}   (words over {f1,f2}, m = length,
// j = number of f2's; X_{0,0} is the whole attractor), or singletons
// {x_{n,k}} for words containing f3.
class ExkamSemantics {
 public:
  struct Desc {
    bool singleton = false;
    int m = 0, j = 0;  // X_{m,j} when !singleton, x_{m,j} when singleton
  };
  using Point = ExkamPoint;

  int alphabet() const { return 3; }  // letters 0,1,2 ~ f1,f2,f3
  Desc whole() const { return {false, 0, 0}; }

  Desc apply(int letter, const Desc& d) const {
    switch (letter) {
      case 0: return {d.singleton, d.m + 1, d.j};
      case 1: return {d.singleton, d.m + 1, d.j + 1};
      case 2: return {true, 0, 0};  // f3 is the constant map 1 = x_{0,0}
      default: throw std::invalid_argument("ExkamSemantics: bad letter");
    }
  }

  std::string key(const Desc& d) const {
    return (d.singleton ? "p:" : "X:") + std::to_string(d.m) + "," + std::to_string(d.j);
  }

  bool is_singleton(const Desc& d) const { return d.singleton; }

  static bool x_subset(const Desc& a, const Desc& b) {
    // X_{m,j} inside X_{m',j'} iff m >= m', j >= j', j - j' <= m - m'
    return a.m >= b.m && a.j >= b.j && a.j - b.j <= a.m - b.m;
  }
  static bool point_in_x(int n, int k, const Desc& x) {
    return n >= x.m && k >= x.j && k - x.j <= n - x.m;
  }

  Relation relate(const Desc& a, const Desc& b) const {
    if (!a.singleton && !b.singleton) {
      bool ab = x_subset(a, b), ba = x_subset(b, a);
      if (ab && ba) return Relation::Equal;
      if (ab) return Relation::Subset;
      if (ba) return Relation::Superset;
      return Relation::ProperOverlap;  // every X_{m,j} contains 0
    }
    if (a.singleton && b.singleton)
      return (a.m == b.m && a.j == b.j) ? Relation::Equal : Relation::Disjoint;
    if (a.singleton) return point_in_x(a.m, a.j, b) ? Relation::Subset : Relation::Disjoint;
    return point_in_x(b.m, b.j, a) ? Relation::Superset : Relation::Disjoint;
  }

  Tri contains(const Point& p, const Desc& d) const {
    if (d.singleton) return (!p.zero && p.n == d.m && p.k == d.j) ? Tri::Yes : Tri::No;
    if (p.zero) return Tri::Yes;
    return point_in_x(p.n, p.k, d) ? Tri::Yes : Tri::No;
  }

  // scaling 2^-m forces every representation of X_{m,j} to have length m
  bool order_exact(const Desc& d, int max_len, int depth) const {
    (void)depth;
    return d.singleton || max_len == d.m;
  }
};

// Double-precision realization for rendering: c = exp(i * angle).
inline Ifs exkam_ifs(double angle = 1.0) {
  std::complex<double> c = std::polar(1.0, angle);
  ComplexAffine f1{{0.5, 0.0}, {0.0, 0.0}};
  ComplexAffine f2{0.5 * c, {0.0, 0.0}};
  ComplexAffine f3{{0.0, 0.0}, {1.0, 0.0}};
  return Ifs({f1.to_real(), f2.to_real(), f3.to_real()});
}

inline std::complex<double> exkam_point_value(const ExkamPoint& p, double angle = 1.0) {
  if (p.zero) return {0.0, 0.0};
  return std::polar(1.0, angle * p.k) / std::pow(2.0, p.n);
}

// u_lambda distance matrix over a list of points, in the metric_core schema.
inline FiniteMetricSpace<Rational> exkam_u_space(const Rational& lambda,
                                                 const std::vector<ExkamPoint>& pts) {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> d(pts.size(), std::vector<Rational>(pts.size(), Rational(0)));
  for (const auto& p : pts)
    labels.push_back(p.zero ? "0" : "x(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")");
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) d[i][j] = exkam_u(lambda, pts[i], pts[j]);
  return FiniteMetricSpace<Rational>(std::move(labels), std::move(d));
}

}  // namespace ufract
