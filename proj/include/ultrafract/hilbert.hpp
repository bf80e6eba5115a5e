#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "ultrafract/metric_space.hpp"

namespace ufract {

struct EmbeddabilityReport {
  enum class Verdict { Embeddable, NotEmbeddable, Borderline } verdict = Verdict::Embeddable;
  double min_gram_eigenvalue = 0.0;
  // zero-sum coefficients with sum d^2(x_i,x_j) c_i c_j > 0 when not embeddable
  std::vector<double> witness;
  double witness_value = 0.0;
};

// Schoenberg criterion: the Gram matrix centered at base_point is positive
// semidefinite iff the space embeds isometrically into a Hilbert space.
// Eigenvalues in (-tol_eff, 0) give a Borderline verdict, tol_eff being
// tol * max(1, |G|_1).
EmbeddabilityReport negative_type_check(const FiniteMetricSpace<double>& space, double tol = 1e-9,
                                        std::size_t base_point = 0);

struct PairFamilyResult {
  bool violation_found = false;
  std::vector<std::size_t> plus, minus;
  double value = 0.0;  // the (3)-sum of the witness family
};

// Searches for families (x+, x-) violating the pair inequality; exhaustive
// with repetition for family sizes <= 3 (bounded by max_n), randomized beyond.
PairFamilyResult pair_family_check(const FiniteMetricSpace<double>& space, int max_n,
                                   std::uint64_t seed = 17, int random_budget = 20000);

// Converts a pair-family witness to zero-sum coefficients in {-1, 0, +1}
// aggregates (repetitions summed per point).
std::vector<double> pair_witness_to_coefficients(const FiniteMetricSpace<double>& space,
                                                 const PairFamilyResult& fam);

double quadratic_form_value(const FiniteMetricSpace<double>& space, const std::vector<double>& c);

struct HilbertEmbedding {
  bool ok = false;
  Eigen::MatrixXd coords;  // one row per point, base point at the origin
  double max_deviation = 0.0;
  EmbeddabilityReport report;
};

// Coordinates from the eigendecomposition of the centered Gram matrix; small
// negative eigenvalues are clamped to zero.  Refuses non-embeddable inputs and
// hands back the witness instead.
HilbertEmbedding hilbert_embedding(const FiniteMetricSpace<double>& space, double tol = 1e-9,
                                   std::size_t base_point = 0);

}  // namespace ufract
