#pragma once

#include <vector>

namespace tvho {

/// Anti-symmetric derivative FIR half-kernel with its design parameters.
///
/// The full length-L kernel is [d_A, ..., d_1, 0, -d_1, ..., -d_A] / T with
/// A = (L-1)/2, applied so that an increasing ramp has positive derivative.
struct KernelSpec {
  int length = 0;       // L, odd, >= 3
  int accuracy = 0;     // p, 2 <= p <= L-1 (odd p has the same rows as p+1)
  int suppression = 0;  // q, derived from L and p
  double dt = 1.0;      // T, sampling interval
  std::vector<double> half;  // d_1 .. d_A

  int half_width() const { return (length - 1) / 2; }
};

/// Solves the noise-robust design system for the half-kernel coefficients.
/// The system is solved in exact rational arithmetic (the plain Vandermonde
/// form is numerically singular in doubles already around L = 15); the
/// result is the correctly rounded double-precision solution.
KernelSpec design_nr_kernel(int length, int accuracy, double dt = 1.0);

/// Imaginary-part magnitude of the filter transfer function,
/// H(w) = (2/T) * sum_l d_l * sin(l*T*w).
double frequency_response(const KernelSpec& k, double omega);

/// Length-L anti-symmetric kernel divided by T. Entry 0 corresponds to the
/// most negative lag; entries sum to zero.
std::vector<double> assemble_full_kernel(const KernelSpec& k);

}  // namespace tvho
