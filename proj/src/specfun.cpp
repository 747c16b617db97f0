#include "pdcsq/specfun.hpp"

#include <cmath>
#include <string>

#include "pdcsq/types.hpp"

namespace pdcsq::specfun {

namespace {

// j_m(x) = x^m sum_n (-x^2/2)^n / (n! (2n+2m+1)!!)
double sph_bessel_series(int m, double x, int terms) {
  double odd_fact = 1.0;
  for (int k = 3; k <= 2 * m + 1; k += 2) odd_fact *= k;
  double term = std::pow(x, m) / odd_fact;
  const double step = -0.5 * x * x;
  double sum = term;
  for (int n = 0; n + 1 < terms; ++n) {
    term *= step / ((n + 1.0) * (2.0 * n + 2.0 * m + 3.0));
    sum += term;
  }
  return sum;
}

// Beyond the 4-term region the closed forms of j_1 and j_2 still cancel
// badly (absolute error ~ eps/x for j_1, eps/x^3 for j_2), so the series is
// continued with more terms up to this bound.
constexpr double kLongSeriesBound = 1.0;
constexpr int kLongSeriesTerms = 14;

}  // namespace

double sinc(double x) noexcept {
  if (std::abs(x) < kSeriesThreshold) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0;
  }
  return std::sin(x) / x;
}

double sph_bessel(int m, double x) {
  if (m < 0 || m > 2) {
    throw PdcError("sph_bessel: unsupported order " + std::to_string(m));
  }
  const double ax = std::abs(x);
  if (ax < kSeriesThreshold) return sph_bessel_series(m, x, 4);
  if (m == 0) return std::sin(x) / x;
  if (ax < kLongSeriesBound) return sph_bessel_series(m, x, kLongSeriesTerms);
  const double s = std::sin(x);
  const double c = std::cos(x);
  if (m == 1) return (s / x - c) / x;
  return (3.0 / (x * x) - 1.0) * (s / x) - 3.0 * c / (x * x);
}

EntirePair<double> entire_cosh_sinhc(double u) noexcept {
  if (std::abs(u) < kSeriesThreshold) {
    const double u2 = u * u;
    return {1.0 + u / 2.0 + u2 / 24.0 + u2 * u / 720.0,
            1.0 + u / 6.0 + u2 / 120.0 + u2 * u / 5040.0};
  }
  if (u > 0.0) {
    const double x = std::sqrt(u);
    return {std::cosh(x), std::sinh(x) / x};
  }
  const double x = std::sqrt(-u);
  return {std::cos(x), std::sin(x) / x};
}

EntirePair<std::complex<double>> entire_cosh_sinhc(std::complex<double> u) noexcept {
  if (std::abs(u) < kSeriesThreshold) {
    const auto u2 = u * u;
    return {1.0 + u / 2.0 + u2 / 24.0 + u2 * u / 720.0,
            1.0 + u / 6.0 + u2 / 120.0 + u2 * u / 5040.0};
  }
  const auto x = std::sqrt(u);
  return {std::cosh(x), std::sinh(x) / x};
}

}  // namespace pdcsq::specfun
