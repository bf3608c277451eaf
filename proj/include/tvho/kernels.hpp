#pragma once

#include <cstddef>

namespace tvho::kern {

/// Elementwise inner loops of the solver, provided as scalar reference code
/// and an AVX2 variant selected at runtime. Both variants produce
/// bit-identical results (no reassociation, no FMA contraction), which the
/// test suite asserts; TVHO_SIMD={auto,scalar,avx2} overrides the selection.

struct Backend {
  // y_i = sgn(x_i) * max(|x_i| - tau, 0)
  void (*soft_threshold)(const double* x, double* y, std::size_t n, double tau);
  // per-site Euclidean shrinkage of the 3-vector (a_i, b_i, c_i)
  void (*vector_soft_threshold)(const double* a, const double* b, const double* c,
                                double* oa, double* ob, double* oc,
                                std::size_t n, double tau);
  // u_i += rho * (h_i - y_i)
  void (*dual_update)(double* u, const double* h, const double* y,
                      std::size_t n, double rho);
  // y_i = x_i / lam_i
  void (*diag_solve)(const double* x, const double* lam, double* y, std::size_t n);
  const char* name;
};

extern const Backend scalar_backend;
#if defined(__x86_64__)
extern const Backend avx2_backend;
#endif

/// Active backend; resolved once from CPU features and TVHO_SIMD.
const Backend& active();
const char* active_name();

inline void soft_threshold(const double* x, double* y, std::size_t n, double tau) {
  active().soft_threshold(x, y, n, tau);
}
inline void vector_soft_threshold(const double* a, const double* b, const double* c,
                                  double* oa, double* ob, double* oc,
                                  std::size_t n, double tau) {
  active().vector_soft_threshold(a, b, c, oa, ob, oc, n, tau);
}
inline void dual_update(double* u, const double* h, const double* y,
                        std::size_t n, double rho) {
  active().dual_update(u, h, y, n, rho);
}
inline void diag_solve(const double* x, const double* lam, double* y, std::size_t n) {
  active().diag_solve(x, lam, y, n);
}

}  // namespace tvho::kern
