#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "tvho/diffkernel.hpp"

using namespace tvho;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

// Hand-solved oracle systems, frozen:
//   (3,2): 1x1, l*d_1 = 1/2                  -> d = [1/2]
//   (5,2): {d1 + 2 d2 = 1/2, -d1 + 2 d2 = 0} -> d = [1/4, 1/8]
//   (5,4): {d1 + 2 d2 = 1/2,  d1 + 8 d2 = 0} -> d = [2/3, -1/12]
TEST_CASE("exact small designs match hand-solved rationals") {
  const auto k32 = design_nr_kernel(3, 2);
  REQUIRE(k32.half.size() == 1);
  CHECK(k32.half[0] == doctest::Approx(0.5).epsilon(1e-14));

  const auto k52 = design_nr_kernel(5, 2);
  REQUIRE(k52.half.size() == 2);
  CHECK(k52.half[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(k52.half[1] == doctest::Approx(0.125).epsilon(1e-14));

  const auto k54 = design_nr_kernel(5, 4);
  REQUIRE(k54.half.size() == 2);
  CHECK(k54.half[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(k54.half[1] == doctest::Approx(-1.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("derived suppression order q = 2 m_o - 1") {
  CHECK(design_nr_kernel(5, 2).suppression == 1);    // A=2, n_o=1, m_o=1
  CHECK(design_nr_kernel(9, 2).suppression == 5);    // A=4, n_o=1, m_o=3
  CHECK(design_nr_kernel(27, 25).suppression == -1); // A=13, n_o=13, m_o=0
}

TEST_CASE("invalid parameter combinations are rejected") {
  CHECK_THROWS_AS(design_nr_kernel(4, 2), std::invalid_argument);   // even L
  CHECK_THROWS_AS(design_nr_kernel(1, 2), std::invalid_argument);   // too short
  CHECK_THROWS_AS(design_nr_kernel(5, 6), std::invalid_argument);   // p > L-1
  CHECK_THROWS_AS(design_nr_kernel(5, 0), std::invalid_argument);   // p < 2
  CHECK_THROWS_AS(design_nr_kernel(3, 2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(design_nr_kernel(3, 2, -1.0), std::invalid_argument);
}

TEST_CASE("odd accuracy p selects the same design rows as p + 1") {
  // Anti-symmetric kernels satisfy the even-degree conditions automatically,
  // so p = 2k+1 and p = 2k+2 lead to the same precision-row count (the
  // paper-scale pair L=27, p=25 relies on this).
  const auto a = design_nr_kernel(5, 3);
  const auto b = design_nr_kernel(5, 4);
  REQUIRE(a.half.size() == b.half.size());
  for (std::size_t i = 0; i < a.half.size(); ++i) CHECK(a.half[i] == b.half[i]);
}

TEST_CASE("coefficients are independent of the sample spacing") {
  const auto a = design_nr_kernel(7, 4, 1.0);
  const auto b = design_nr_kernel(7, 4, 0.01);
  REQUIRE(a.half.size() == b.half.size());
  for (std::size_t i = 0; i < a.half.size(); ++i) CHECK(a.half[i] == b.half[i]);
}

TEST_CASE("frequency response pinned values") {
  const auto k3 = design_nr_kernel(3, 2);
  CHECK(frequency_response(k3, 0.0) == 0.0);
  // 2 * (1/2) * sin(pi/2) = 1
  CHECK(frequency_response(k3, kPi / 2.0) == doctest::Approx(1.0).epsilon(1e-14));

  const auto k52 = design_nr_kernel(5, 2);
  CHECK(std::fabs(frequency_response(k52, kPi)) < 1e-12);
}

TEST_CASE("Nyquist suppression whenever a suppression row exists") {
  for (auto [L, p] : {std::pair{5, 2}, {7, 2}, {7, 4}, {9, 4}, {11, 6}}) {
    const auto k = design_nr_kernel(L, p);
    CAPTURE(L);
    CAPTURE(p);
    CHECK(std::fabs(frequency_response(k, kPi)) < 1e-10);
  }
}

TEST_CASE("low-frequency response matches the ideal i*omega to order p") {
  // |H(w) - w| <= C * w^(p+1): the ratio |H(w)-w| / w^(p+1) must stay bounded
  // as w -> 0 (checked by comparing against the fitted constant at w = 0.1).
  for (auto [L, p] : {std::pair{5, 2}, {7, 4}, {9, 6}}) {
    const auto k = design_nr_kernel(L, p);
    const double c_fit = std::fabs(frequency_response(k, 0.1) - 0.1) / std::pow(0.1, p + 1);
    for (double w = 0.01; w <= 0.1; w += 0.01) {
      const double err = std::fabs(frequency_response(k, w) - w);
      CAPTURE(L);
      CAPTURE(w);
      CHECK(err <= 4.0 * (c_fit + 1e-12) * std::pow(w, p + 1) + 1e-15);
    }
  }
}

TEST_CASE("full kernel assembly matches the anti-symmetric layout") {
  const auto k3 = design_nr_kernel(3, 2);
  const auto f3 = assemble_full_kernel(k3);
  REQUIRE(f3.size() == 3);
  CHECK(f3[0] == 0.5);
  CHECK(f3[1] == 0.0);
  CHECK(f3[2] == -0.5);

  const auto k52 = design_nr_kernel(5, 2);
  const auto f52 = assemble_full_kernel(k52);
  REQUIRE(f52.size() == 5);
  CHECK(f52[0] == 0.125);
  CHECK(f52[1] == 0.25);
  CHECK(f52[2] == 0.0);
  CHECK(f52[3] == -0.25);
  CHECK(f52[4] == -0.125);

  const auto khalf = design_nr_kernel(3, 2, 0.5);
  const auto fh = assemble_full_kernel(khalf);
  CHECK(fh[0] == 1.0);
  CHECK(fh[2] == -1.0);
}

TEST_CASE("full kernel entries sum to zero for any design") {
  for (auto [L, p] : {std::pair{3, 2}, {5, 2}, {9, 6}, {27, 25}}) {
    const auto full = assemble_full_kernel(design_nr_kernel(L, p));
    const double s = std::accumulate(full.begin(), full.end(), 0.0);
    CHECK(std::fabs(s) < 1e-12);
  }
}

TEST_CASE("interior convolution is exact on polynomials up to degree p") {
  // convolve t^deg samples with the full kernel; compare against deg*t^(deg-1)
  for (auto [L, p] : {std::pair{5, 2}, {7, 4}, {9, 6}}) {
    const auto k = design_nr_kernel(L, p);
    const auto full = assemble_full_kernel(k);
    const int half = k.half_width();
    const int n = 40;
    for (int deg = 1; deg <= p; ++deg) {
      for (int j = half; j < n - half; j += 7) {
        double acc = 0.0;
        // entry 0 of the full kernel is the most negative lag
        for (int idx = 0; idx < k.length; ++idx) {
          const int t = j + (idx - half);
          acc += full[static_cast<std::size_t>(k.length - 1 - idx)] * std::pow(t, deg);
        }
        const double truth = deg * std::pow(j, deg - 1);
        CAPTURE(L);
        CAPTURE(deg);
        CHECK(acc == doctest::Approx(truth).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("constant vectors are annihilated at interior positions") {
  const auto full = assemble_full_kernel(design_nr_kernel(9, 4));
  const double s = std::accumulate(full.begin(), full.end(), 0.0);
  CHECK(std::fabs(s * 123.456) < 1e-12);
}

TEST_CASE("the paper-scale design is fast and meets its frequency contract") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto k = design_nr_kernel(27, 25);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(elapsed < 1.0);
  for (double w = 0.0; w <= 0.3; w += 0.003)
    CHECK(std::fabs(frequency_response(k, w) - w) <= 1e-6);
  CHECK(std::fabs(frequency_response(k, kPi)) <= 1e-10);
}
