#pragma once

#include <Eigen/Dense>

#include "tvho/bcdiff.hpp"
#include "tvho/tensor.hpp"

namespace tvho {

/// Cached per-axis eigendecompositions of D^T D together with the composite
/// diagonal Lambda0 of the quadratic operator
/// O = mu1 * grad^T grad + (mu2 + mu3) * I.
struct SpectralFactorization {
  Eigen::MatrixXd qm, qn, qN;       // orthogonal eigenvector bases
  Eigen::VectorXd lm, ln, lN;       // nonnegative eigenvalues per axis
  Eigen::VectorXd lambda0;          // length mnN, strictly positive
  double mu1 = 0.0, mu2 = 0.0, mu3 = 0.0;

  /// Q Lambda0^{-1} Q^T rhs via mode-wise products and a diagonal solve.
  VideoTensor solve_f(const VideoTensor& rhs) const;
};

SpectralFactorization factorize(const DerivativeOperator& dm,
                                const DerivativeOperator& dn,
                                const DerivativeOperator& dN,
                                double mu1, double mu2, double mu3);

}  // namespace tvho
