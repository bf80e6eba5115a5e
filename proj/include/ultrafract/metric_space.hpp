#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ultrafract/rational.hpp"

namespace ufract {

// n labeled points with a symmetric distance matrix.  T is double (with a
// caller-supplied tolerance) or Rational (tolerance 0, comparisons exact).
template <class T>
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<std::vector<T>> dist)
      : labels_(std::move(labels)) {
    n_ = labels_.size();
    if (dist.size() != n_) throw std::invalid_argument("FiniteMetricSpace: matrix size mismatch");
    d_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (dist[i].size() != n_) throw std::invalid_argument("FiniteMetricSpace: matrix not square");
      for (std::size_t j = 0; j < n_; ++j) d_[i * n_ + j] = dist[i][j];
    }
  }

  std::size_t size() const { return n_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const T& at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

  T diameter() const {
    T m{0};
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (d_[i * n_ + j] > m) m = d_[i * n_ + j];
    return m;
  }

  struct Violation {
    std::string kind;  // "negative", "asymmetric", "nonzero-diagonal", "triangle"
    std::size_t i = 0, j = 0, k = 0;
  };

  // Checks the metric axioms within tol; returns the first violation found.
  std::optional<Violation> validate(const T& tol) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (d_[i * n_ + i] > tol || d_[i * n_ + i] < -tol) return Violation{"nonzero-diagonal", i, i, 0};
      for (std::size_t j = 0; j < n_; ++j) {
        if (d_[i * n_ + j] < -tol) return Violation{"negative", i, j, 0};
        T diff = d_[i * n_ + j] - d_[j * n_ + i];
        if (diff > tol || diff < -tol) return Violation{"asymmetric", i, j, 0};
      }
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (d_[i * n_ + k] > d_[i * n_ + j] + d_[j * n_ + k] + tol)
            return Violation{"triangle", i, j, k};
    return std::nullopt;
  }

  FiniteMetricSpace subspace(const std::vector<std::size_t>& idx) const {
    std::vector<std::string> labels;
    std::vector<std::vector<T>> dist(idx.size(), std::vector<T>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      labels.push_back(labels_[idx[a]]);
      for (std::size_t b = 0; b < idx.size(); ++b) dist[a][b] = at(idx[a], idx[b]);
    }
    return FiniteMetricSpace(std::move(labels), std::move(dist));
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<T> d_;
};

// Finite list of points in R^d.
struct PointSet {
  std::vector<Eigen::VectorXd> points;

  std::size_t size() const { return points.size(); }
  int dim() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
  void require_nonempty() const {
    if (points.empty()) throw std::invalid_argument("PointSet: empty");
  }
};

}  // namespace ufract
