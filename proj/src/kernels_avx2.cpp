#if defined(__x86_64__)

#include <immintrin.h>

#include <cmath>

#include "tvho/kernels.hpp"

namespace tvho::kern {

namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);

void soft_threshold_avx2(const double* x, double* y, std::size_t n, double tau) {
  const __m256d vtau = _mm256_set1_pd(tau);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d mag = _mm256_max_pd(_mm256_sub_pd(_mm256_andnot_pd(kSignMask, v), vtau), zero);
    _mm256_storeu_pd(y + i, _mm256_or_pd(mag, _mm256_and_pd(kSignMask, v)));
  }
  for (; i < n; ++i) {
    const double a = std::fabs(x[i]) - tau;
    const double m = a > 0.0 ? a : 0.0;
    y[i] = std::copysign(m, x[i]);
  }
}

void vector_soft_threshold_avx2(const double* a, const double* b, const double* c,
                                double* oa, double* ob, double* oc,
                                std::size_t n, double tau) {
  const __m256d vtau = _mm256_set1_pd(tau);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    const __m256d vc = _mm256_loadu_pd(c + i);
    // same association as the scalar path: (a*a + b*b) + c*c
    const __m256d sum = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(va, va), _mm256_mul_pd(vb, vb)),
        _mm256_mul_pd(vc, vc));
    const __m256d norm = _mm256_sqrt_pd(sum);
    const __m256d shrunk = _mm256_sub_pd(norm, vtau);
    const __m256d keep = _mm256_and_pd(_mm256_cmp_pd(shrunk, zero, _CMP_GT_OQ),
                                       _mm256_cmp_pd(norm, zero, _CMP_GT_OQ));
    const __m256d scale = _mm256_and_pd(_mm256_div_pd(shrunk, norm), keep);
    _mm256_storeu_pd(oa + i, _mm256_mul_pd(va, scale));
    _mm256_storeu_pd(ob + i, _mm256_mul_pd(vb, scale));
    _mm256_storeu_pd(oc + i, _mm256_mul_pd(vc, scale));
  }
  for (; i < n; ++i) {
    const double norm = std::sqrt(a[i] * a[i] + b[i] * b[i] + c[i] * c[i]);
    const double shrunk = norm - tau;
    const double scale = (shrunk > 0.0 && norm > 0.0) ? shrunk / norm : 0.0;
    oa[i] = a[i] * scale;
    ob[i] = b[i] * scale;
    oc[i] = c[i] * scale;
  }
}

void dual_update_avx2(double* u, const double* h, const double* y,
                      std::size_t n, double rho) {
  const __m256d vrho = _mm256_set1_pd(rho);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_mul_pd(vrho, _mm256_sub_pd(_mm256_loadu_pd(h + i),
                                                        _mm256_loadu_pd(y + i)));
    _mm256_storeu_pd(u + i, _mm256_add_pd(_mm256_loadu_pd(u + i), r));
  }
  for (; i < n; ++i) u[i] = u[i] + rho * (h[i] - y[i]);
}

void diag_solve_avx2(const double* x, const double* lam, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_div_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(lam + i)));
  for (; i < n; ++i) y[i] = x[i] / lam[i];
}

}  // namespace

const Backend avx2_backend = {
    soft_threshold_avx2,
    vector_soft_threshold_avx2,
    dual_update_avx2,
    diag_solve_avx2,
    "avx2",
};

}  // namespace tvho::kern

#endif  // __x86_64__
