#include "tvho/diffkernel.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tvho {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Exact Gaussian elimination with partial (nonzero) pivoting.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a,
                                     std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("design_nr_kernel: singular design system");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace

KernelSpec design_nr_kernel(int length, int accuracy, double dt) {
  if (length < 3 || length % 2 == 0)
    throw std::invalid_argument("design_nr_kernel: length must be odd and >= 3, got " +
                                std::to_string(length));
  if (accuracy < 2)
    throw std::invalid_argument("design_nr_kernel: accuracy must be >= 2, got " +
                                std::to_string(accuracy));
  if (accuracy > length - 1)
    throw std::invalid_argument("design_nr_kernel: accuracy exceeds length-1");
  if (!(dt > 0.0)) throw std::invalid_argument("design_nr_kernel: dt must be positive");

  const int half = (length - 1) / 2;          // A
  const int precision_rows = (accuracy - 1) / 2 + 1;  // n_o
  const int suppression_rows = half - precision_rows;  // m_o
  if (suppression_rows < 0)
    throw std::invalid_argument("design_nr_kernel: invalid (length, accuracy) pair");

  // Precision rows: sum_l l^(2k+1) d_l = 1/2 for k=0, 0 otherwise.
  // Suppression rows: sum_l (-1)^l l^(2k+1) d_l = 0.
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (int k = 0; k < precision_rows; ++k) {
    std::vector<Rational> row(half);
    for (int l = 1; l <= half; ++l) row[l - 1] = Rational(ipow(l, 2 * k + 1));
    a.push_back(std::move(row));
    b.push_back(k == 0 ? Rational(1, 2) : Rational(0));
  }
  for (int k = 0; k < suppression_rows; ++k) {
    std::vector<Rational> row(half);
    for (int l = 1; l <= half; ++l) {
      Rational v(ipow(l, 2 * k + 1));
      if (l % 2 != 0) v = -v;
      row[l - 1] = v;
    }
    a.push_back(std::move(row));
    b.push_back(Rational(0));
  }

  const std::vector<Rational> d = solve_rational(std::move(a), std::move(b));

  KernelSpec spec;
  spec.length = length;
  spec.accuracy = accuracy;
  spec.suppression = 2 * suppression_rows - 1;
  spec.dt = dt;
  spec.half.resize(half);
  for (int l = 0; l < half; ++l) spec.half[l] = d[l].convert_to<double>();
  return spec;
}

double frequency_response(const KernelSpec& k, double omega) {
  double s = 0.0;
  for (std::size_t l = 0; l < k.half.size(); ++l)
    s += k.half[l] * std::sin(static_cast<double>(l + 1) * k.dt * omega);
  return 2.0 / k.dt * s;
}

std::vector<double> assemble_full_kernel(const KernelSpec& k) {
  const int half = k.half_width();
  std::vector<double> full(k.length, 0.0);
  for (int l = 1; l <= half; ++l) {
    full[half - l] = k.half[l - 1] / k.dt;   // lag -l
    full[half + l] = -k.half[l - 1] / k.dt;  // lag +l
  }
  return full;
}

}  // namespace tvho
