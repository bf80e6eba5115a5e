#include "ultrafract/hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ufract {

namespace {

Eigen::MatrixXd centered_gram(const FiniteMetricSpace<double>& space, std::size_t base) {
  std::size_t n = space.size();
  Eigen::MatrixXd g(n - 1, n - 1);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (i != base) rest.push_back(i);
  for (std::size_t a = 0; a < rest.size(); ++a)
    for (std::size_t b = 0; b < rest.size(); ++b) {
      double dib = space.at(base, rest[a]);
      double djb = space.at(base, rest[b]);
      double dij = space.at(rest[a], rest[b]);
      g(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = 0.5 * (dib * dib + djb * djb - dij * dij);
    }
  return g;
}

}  // namespace

double quadratic_form_value(const FiniteMetricSpace<double>& space, const std::vector<double>& c) {
  double s = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j) {
      double d = space.at(i, j);
      s += d * d * c[i] * c[j];
    }
  return s;
}

EmbeddabilityReport negative_type_check(const FiniteMetricSpace<double>& space, double tol,
                                        std::size_t base_point) {
  if (space.size() == 0) throw std::invalid_argument("negative_type_check: empty space");
  EmbeddabilityReport rep;
  if (space.size() == 1) return rep;
  if (base_point >= space.size()) throw std::invalid_argument("negative_type_check: bad base point");

  Eigen::MatrixXd g = centered_gram(space, base_point);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  double min_eig = es.eigenvalues()(0);
  rep.min_gram_eigenvalue = min_eig;
  double tol_eff = tol * std::max(1.0, g.cwiseAbs().colwise().sum().maxCoeff());

  if (min_eig >= 0.0) {
    rep.verdict = EmbeddabilityReport::Verdict::Embeddable;
    return rep;
  }
  if (min_eig > -tol_eff) {
    rep.verdict = EmbeddabilityReport::Verdict::Borderline;
    return rep;
  }
  rep.verdict = EmbeddabilityReport::Verdict::NotEmbeddable;
  Eigen::VectorXd v = es.eigenvectors().col(0);
  rep.witness.assign(space.size(), 0.0);
  double sum = 0.0;
  std::size_t a = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i == base_point) continue;
    rep.witness[i] = v(static_cast<Eigen::Index>(a++));
    sum += rep.witness[i];
  }
  rep.witness[base_point] = -sum;  // zero-sum coefficients
  rep.witness_value = quadratic_form_value(space, rep.witness);
  return rep;
}

namespace {

double pair_family_value(const FiniteMetricSpace<double>& space, const std::vector<std::size_t>& plus,
                         const std::vector<std::size_t>& minus) {
  double s = 0.0;
  std::size_t k = plus.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      double dpp = space.at(plus[i], plus[j]);
      double dmm = space.at(minus[i], minus[j]);
      double dpm = space.at(plus[i], minus[j]);
      s += dpp * dpp + dmm * dmm - 2.0 * dpm * dpm;
    }
  return s;
}

bool next_tuple(std::vector<std::size_t>& t, std::size_t n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

PairFamilyResult pair_family_check(const FiniteMetricSpace<double>& space, int max_n,
                                   std::uint64_t seed, int random_budget) {
  PairFamilyResult res;
  std::size_t n = space.size();
  if (n == 0 || max_n < 1) return res;
  double scale = space.diameter();
  double tol = 1e-9 * std::max(1.0, scale * scale);

  int exhaustive_to = std::min(max_n, 3);
  for (int k = 1; k <= exhaustive_to; ++k) {
    std::vector<std::size_t> tuple(2 * static_cast<std::size_t>(k), 0);
    do {
      std::vector<std::size_t> plus(tuple.begin(), tuple.begin() + k);
      std::vector<std::size_t> minus(tuple.begin() + k, tuple.end());
      double v = pair_family_value(space, plus, minus);
      if (v > tol) {
        res.violation_found = true;
        res.plus = plus;
        res.minus = minus;
        res.value = v;
        return res;
      }
    } while (next_tuple(tuple, n));
  }
  if (max_n > exhaustive_to) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> size_pick(exhaustive_to + 1, max_n);
    for (int trial = 0; trial < random_budget; ++trial) {
      int k = size_pick(rng);
      std::vector<std::size_t> plus, minus;
      for (int i = 0; i < k; ++i) {
        plus.push_back(pick(rng));
        minus.push_back(pick(rng));
      }
      double v = pair_family_value(space, plus, minus);
      if (v > tol) {
        res.violation_found = true;
        res.plus = plus;
        res.minus = minus;
        res.value = v;
        return res;
      }
    }
  }
  return res;
}

std::vector<double> pair_witness_to_coefficients(const FiniteMetricSpace<double>& space,
                                                 const PairFamilyResult& fam) {
  std::vector<double> c(space.size(), 0.0);
  for (std::size_t i : fam.plus) c[i] += 1.0;
  for (std::size_t i : fam.minus) c[i] -= 1.0;
  return c;
}

HilbertEmbedding hilbert_embedding(const FiniteMetricSpace<double>& space, double tol,
                                   std::size_t base_point) {
  HilbertEmbedding out;
  out.report = negative_type_check(space, tol, base_point);
  if (out.report.verdict == EmbeddabilityReport::Verdict::NotEmbeddable) return out;

  std::size_t n = space.size();
  out.coords = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), std::max<Eigen::Index>(1, static_cast<Eigen::Index>(n) - 1));
  if (n == 1) {
    out.ok = true;
    return out;
  }
  Eigen::MatrixXd g = centered_gram(space, base_point);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  Eigen::VectorXd lam = es.eigenvalues();
  Eigen::MatrixXd u = es.eigenvectors();
  for (Eigen::Index i = 0; i < lam.size(); ++i) lam(i) = lam(i) > 0.0 ? std::sqrt(lam(i)) : 0.0;
  Eigen::MatrixXd pts = u * lam.asDiagonal();  // rows: points other than base

  std::size_t a = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == base_point) continue;
    out.coords.row(static_cast<Eigen::Index>(i)) = pts.row(static_cast<Eigen::Index>(a++));
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double d = (out.coords.row(static_cast<Eigen::Index>(i)) - out.coords.row(static_cast<Eigen::Index>(j))).norm();
      dev = std::max(dev, std::abs(d - space.at(i, j)));
    }
  out.max_deviation = dev;
  out.ok = true;
  return out;
}

}  // namespace ufract
