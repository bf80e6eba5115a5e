#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ultrafract/rational.hpp"

namespace ufract {

// x -> A x + b on R^d.  The Lipschitz constant is the spectral norm of A.
class AffineContraction {
 public:
  AffineContraction() = default;
  AffineContraction(Eigen::MatrixXd A, Eigen::VectorXd b) : A_(std::move(A)), b_(std::move(b)) {
    if (A_.rows() != A_.cols() || A_.rows() != b_.size())
      throw std::invalid_argument("AffineContraction: shape mismatch");
  }

  static AffineContraction identity(int dim) {
    return AffineContraction(Eigen::MatrixXd::Identity(dim, dim), Eigen::VectorXd::Zero(dim));
  }

  int dim() const { return static_cast<int>(b_.size()); }
  const Eigen::MatrixXd& matrix() const { return A_; }
  const Eigen::VectorXd& offset() const { return b_; }

  double lip() const {
    if (!lip_) {
      if (A_.size() == 1) lip_ = std::abs(A_(0, 0));
      else lip_ = Eigen::JacobiSVD<Eigen::MatrixXd>(A_).singularValues()(0);
    }
    return *lip_;
  }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const { return A_ * x + b_; }

  // this after g: x -> this(g(x)).
  AffineContraction compose(const AffineContraction& g) const {
    return AffineContraction(A_ * g.A_, A_ * g.b_ + b_);
  }

  bool is_constant(double tol = 0.0) const { return A_.lpNorm<Eigen::Infinity>() <= tol; }

  friend bool operator==(const AffineContraction& f, const AffineContraction& g) {
    return f.A_ == g.A_ && f.b_ == g.b_;
  }

 private:
  Eigen::MatrixXd A_;
  Eigen::VectorXd b_;
  mutable std::optional<double> lip_;
};

// z -> a z + b on the complex plane; Lip = |a|.  Kept as a specialization so
// |a| = 1 rotations keep their modulus exactly; converts to a 2x2 real map.
struct ComplexAffine {
  std::complex<double> a{0.0, 0.0};
  std::complex<double> b{0.0, 0.0};

  double lip() const { return std::abs(a); }
  std::complex<double> apply(std::complex<double> z) const { return a * z + b; }

  AffineContraction to_real() const {
    Eigen::MatrixXd A(2, 2);
    A << a.real(), -a.imag(), a.imag(), a.real();
    Eigen::VectorXd v(2);
    v << b.real(), b.imag();
    return AffineContraction(A, v);
  }
};

class Ifs {
 public:
  Ifs() = default;
  explicit Ifs(std::vector<AffineContraction> maps) : maps_(std::move(maps)) {
    if (maps_.empty()) throw std::invalid_argument("Ifs: needs at least one map");
    dim_ = maps_[0].dim();
    for (const auto& f : maps_) {
      if (f.dim() != dim_) throw std::invalid_argument("Ifs: mixed dimensions");
      if (f.lip() >= 1.0) throw std::invalid_argument("Ifs: map is not contracting");
    }
  }

  std::size_t size() const { return maps_.size(); }
  int dim() const { return dim_; }
  const AffineContraction& map(std::size_t i) const { return maps_.at(i); }
  const std::vector<AffineContraction>& maps() const { return maps_; }

  double lip() const {
    double m = 0.0;
    for (const auto& f : maps_) m = std::max(m, f.lip());
    return m;
  }

 private:
  std::vector<AffineContraction> maps_;
  int dim_ = 0;
};

// Piecewise-affine self-map guarded on the last coordinate; the pieces have
// pairwise disjoint guard intervals.  Hosts the product-structure maps.
class GuardedAffineMap {
 public:
  struct Piece {
    double lo, hi;  // guard: lo <= x[last] <= hi
    AffineContraction map;
  };

  GuardedAffineMap() = default;
  explicit GuardedAffineMap(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("GuardedAffineMap: no pieces");
  }

  const std::vector<Piece>& pieces() const { return pieces_; }

  double lip() const {
    double m = 0.0;
    for (const auto& p : pieces_) m = std::max(m, p.map.lip());
    return m;
  }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
    double level = x(x.size() - 1);
    for (const auto& p : pieces_)
      if (level >= p.lo && level <= p.hi) return p.map.apply(x);
    throw std::domain_error("GuardedAffineMap: point outside all guards");
  }

 private:
  std::vector<Piece> pieces_;
};

// Exact 1-D affine map over rationals, for the exact Cantor-style backends.
struct RationalAffine1D {
  Rational a, b;
  Rational apply(const Rational& x) const { return a * x + b; }
  RationalAffine1D compose(const RationalAffine1D& g) const { return {a * g.a, a * g.b + b}; }
  Rational fixed_point() const {
    if (a == 1) throw std::domain_error("RationalAffine1D: not contracting");
    return b / (Rational(1) - a);
  }
};

}  // namespace ufract
