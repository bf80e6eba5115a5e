#pragma once

#include <cmath>
#include <cstring>

#include "ultrafract/cylinder.hpp"
#include "ultrafract/ifs_ops.hpp"

namespace ufract {

// Numeric backend: cylinder images carried as the composed affine map plus a
// sample cloud of true attractor points (seeded from the map fixed points,
// so every sample lies in the attractor).  Disjointness and overlap can be
// certified against the dilation radius; containments that are not forced by
// word structure stay Unknown rather than being guessed.
class AffineSemantics {
 public:
  struct Desc {
    AffineContraction map;
    std::vector<Eigen::VectorXd> cloud;
    double dilation = 0.0;
  };
  using Point = Eigen::VectorXd;

  AffineSemantics(Ifs ifs, int approx_depth = 10, double rounding_slack = 1e-12)
      : ifs_(std::move(ifs)), slack_(rounding_slack) {
    PointSet seed;
    for (const auto& f : ifs_.maps()) seed.points.push_back(fixed_point(f));
    AttractorApprox approx = attractor_approx(ifs_, seed, approx_depth);
    base_cloud_ = approx.points.points;
    base_certificate_ = approx.certificate;
  }

  const Ifs& ifs() const { return ifs_; }
  double base_certificate() const { return base_certificate_; }

  int alphabet() const { return static_cast<int>(ifs_.size()); }

  Desc whole() const {
    Desc d;
    d.map = AffineContraction::identity(ifs_.dim());
    d.cloud = base_cloud_;
    d.dilation = base_certificate_ + slack_;
    return d;
  }

  Desc apply(int letter, const Desc& d) const {
    const AffineContraction& f = ifs_.map(static_cast<std::size_t>(letter));
    Desc out;
    out.map = f.compose(d.map);
    out.cloud.reserve(d.cloud.size());
    for (const auto& p : d.cloud) out.cloud.push_back(f.apply(p));
    out.dilation = out.map.lip() * base_certificate_ + slack_;
    return out;
  }

  std::string key(const Desc& d) const {
    const auto& A = d.map.matrix();
    const auto& b = d.map.offset();
    std::string s;
    s.resize(static_cast<std::size_t>(A.size() + b.size()) * sizeof(double));
    std::memcpy(s.data(), A.data(), static_cast<std::size_t>(A.size()) * sizeof(double));
    std::memcpy(s.data() + static_cast<std::size_t>(A.size()) * sizeof(double), b.data(),
                static_cast<std::size_t>(b.size()) * sizeof(double));
    return s;
  }

  bool is_singleton(const Desc& d) const { return d.map.is_constant(); }

  Relation relate(const Desc& a, const Desc& b) const {
    if (is_singleton(a) && is_singleton(b))
      return a.map.offset() == b.map.offset() ? Relation::Equal : Relation::Disjoint;
    double gap = std::numeric_limits<double>::infinity();
    bool shared = false;
    for (const auto& p : a.cloud)
      for (const auto& q : b.cloud) {
        double d2 = (p - q).norm();
        gap = std::min(gap, d2);
        if (p == q) shared = true;
      }
    if (gap > a.dilation + b.dilation) return Relation::Disjoint;
    if (shared) {
      bool a_escapes = cloud_escapes(a, b);
      bool b_escapes = cloud_escapes(b, a);
      if (a_escapes && b_escapes) return Relation::ProperOverlap;
    }
    return Relation::Unknown;
  }

  Tri contains(const Point& p, const Desc& d) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : d.cloud) best = std::min(best, (p - q).norm());
    if (best == 0.0) return Tri::Yes;
    if (best > d.dilation) return Tri::No;
    return Tri::Yes;  // numeric membership: within the certificate width
  }

  bool order_exact(const Desc& d, int max_len, int depth) const {
    (void)max_len;
    if (is_singleton(d)) return true;
    double lip_f = ifs_.lip();
    double sigma = d.map.lip();
    if (sigma <= 0.0 || lip_f <= 0.0) return false;
    double bound = std::log(sigma) / std::log(lip_f);
    return bound <= static_cast<double>(depth) + 1e-9;
  }

 private:
  // certified: some true point of a lies strictly outside b
  bool cloud_escapes(const Desc& a, const Desc& b) const {
    for (const auto& p : a.cloud) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : b.cloud) best = std::min(best, (p - q).norm());
      if (best > b.dilation) return true;
    }
    return false;
  }

  Ifs ifs_;
  double slack_;
  std::vector<Eigen::VectorXd> base_cloud_;
  double base_certificate_ = 0.0;
};

inline Ifs cantor_ifs() {
  Eigen::MatrixXd a(1, 1);
  a << 1.0 / 3.0;
  Eigen::VectorXd b0(1), b1(1);
  b0 << 0.0;
  b1 << 2.0 / 3.0;
  return Ifs({AffineContraction(a, b0), AffineContraction(a, b1)});
}

inline std::vector<RationalAffine1D> cantor_maps_1d() {
  return {{Rational(1, 3), Rational(0)}, {Rational(1, 3), Rational(2, 3)}};
}

}  // namespace ufract
