#include <cmath>

#include "tvho/kernels.hpp"

namespace tvho::kern {

namespace {

void soft_threshold_scalar(const double* x, double* y, std::size_t n, double tau) {
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(x[i]) - tau;
    const double m = a > 0.0 ? a : 0.0;
    y[i] = std::copysign(m, x[i]);
  }
}

void vector_soft_threshold_scalar(const double* a, const double* b, const double* c,
                                  double* oa, double* ob, double* oc,
                                  std::size_t n, double tau) {
  for (std::size_t i = 0; i < n; ++i) {
    const double norm = std::sqrt(a[i] * a[i] + b[i] * b[i] + c[i] * c[i]);
    const double shrunk = norm - tau;
    // 0/||0|| convention: zero sites stay zero.
    const double scale = (shrunk > 0.0 && norm > 0.0) ? shrunk / norm : 0.0;
    oa[i] = a[i] * scale;
    ob[i] = b[i] * scale;
    oc[i] = c[i] * scale;
  }
}

void dual_update_scalar(double* u, const double* h, const double* y,
                        std::size_t n, double rho) {
  for (std::size_t i = 0; i < n; ++i) u[i] = u[i] + rho * (h[i] - y[i]);
}

void diag_solve_scalar(const double* x, const double* lam, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] / lam[i];
}

}  // namespace

const Backend scalar_backend = {
    soft_threshold_scalar,
    vector_soft_threshold_scalar,
    dual_update_scalar,
    diag_solve_scalar,
    "scalar",
};

}  // namespace tvho::kern
