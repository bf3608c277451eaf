#include "tvho/bcdiff.hpp"

#include <stdexcept>
#include <string>

namespace tvho {

const char* bc_name(BcKind kind) {
  switch (kind) {
    case BcKind::Zero: return "zero";
    case BcKind::Periodic: return "periodic";
    case BcKind::Reflective: return "reflective";
    case BcKind::AntiReflective: return "antireflective";
  }
  throw std::invalid_argument("bc_name: unknown boundary kind");
}

BcKind bc_from_name(const std::string& name) {
  if (name == "zero") return BcKind::Zero;
  if (name == "periodic") return BcKind::Periodic;
  if (name == "reflective") return BcKind::Reflective;
  if (name == "antireflective") return BcKind::AntiReflective;
  throw std::invalid_argument("unknown boundary condition: " + name);
}

namespace {

// Adds the in-range column coefficients representing the extended sample at
// index e (which may lie outside [0, n)) scaled by w into row accumulation.
void accumulate_extended(Eigen::MatrixXd& mat, int row, int e, double w, int n,
                         const BoundaryCondition& bc) {
  if (e >= 0 && e < n) {
    mat(row, e) += w;
    return;
  }
  const int s = bc.shift;
  switch (bc.kind) {
    case BcKind::Zero:
      break;
    case BcKind::Periodic: {
      int idx = e % n;
      if (idx < 0) idx += n;
      mat(row, idx) += w;
      break;
    }
    case BcKind::Reflective: {
      if (e < 0) {
        const int t = -e;  // f_{-t} = f_{s+t-1}
        mat(row, s + t - 1) += w;
      } else {
        const int t = e - (n - 1);  // f_{n-1+t} = f_{n-s-t}
        mat(row, n - s - t) += w;
      }
      break;
    }
    case BcKind::AntiReflective: {
      if (e < 0) {
        const int t = -e;  // f_{-t} = 2 f_0 - f_{s+t-1}
        mat(row, 0) += 2.0 * w;
        mat(row, s + t - 1) -= w;
      } else {
        const int t = e - (n - 1);  // f_{n-1+t} = 2 f_{n-1} - f_{n-s-t}
        mat(row, n - 1) += 2.0 * w;
        mat(row, n - s - t) -= w;
      }
      break;
    }
  }
}

}  // namespace

DerivativeOperator build_derivative_matrix(int n, const KernelSpec& kernel,
                                           const BoundaryCondition& bc) {
  if (n < kernel.length)
    throw std::invalid_argument("build_derivative_matrix: n < kernel length (" +
                                std::to_string(n) + " < " + std::to_string(kernel.length) + ")");
  if (bc.shift != 0 && bc.shift != 1)
    throw std::invalid_argument("build_derivative_matrix: shift must be 0 or 1");

  const int half = kernel.half_width();
  DerivativeOperator op;
  op.n = n;
  op.kernel = kernel;
  op.bc = bc;
  op.mat = Eigen::MatrixXd::Zero(n, n);

  // f'_j = (1/T) sum_l d_l (f_{j+l} - f_{j-l})
  for (int j = 0; j < n; ++j) {
    for (int l = 1; l <= half; ++l) {
      const double w = kernel.half[l - 1] / kernel.dt;
      accumulate_extended(op.mat, j, j + l, w, n, bc);
      accumulate_extended(op.mat, j, j - l, -w, n, bc);
    }
  }
  return op;
}

Eigen::VectorXd DerivativeOperator::apply(const Eigen::VectorXd& f) const {
  if (f.size() != n)
    throw std::invalid_argument("DerivativeOperator::apply: length mismatch");
  return mat * f;
}

}  // namespace tvho
