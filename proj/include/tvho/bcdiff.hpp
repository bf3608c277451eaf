#pragma once

#include <Eigen/Dense>
#include <string>

#include "tvho/diffkernel.hpp"

namespace tvho {

enum class BcKind { Zero, Periodic, Reflective, AntiReflective };

/// Boundary rule for extending a signal past its ends. The shift s in {0, 1}
/// applies to the Reflective and AntiReflective kinds only; s = 1 avoids
/// repeating the edge sample in the extension.
struct BoundaryCondition {
  BcKind kind = BcKind::Zero;
  int shift = 1;
};

const char* bc_name(BcKind kind);
BcKind bc_from_name(const std::string& name);

/// Dense n x n derivative matrix for one axis under a boundary condition.
/// Interior rows are the pure Toeplitz stencil of the anti-symmetric kernel;
/// the first and last (L-1)/2 rows fold the boundary extension back into
/// in-range columns.
struct DerivativeOperator {
  int n = 0;
  KernelSpec kernel;
  BoundaryCondition bc;
  Eigen::MatrixXd mat;

  Eigen::VectorXd apply(const Eigen::VectorXd& f) const;
  Eigen::MatrixXd gram() const { return mat.transpose() * mat; }
};

DerivativeOperator build_derivative_matrix(int n, const KernelSpec& kernel,
                                           const BoundaryCondition& bc);

}  // namespace tvho
