#pragma once

#include <complex>

namespace pdcsq::specfun {

/// Below this |x| the sinc and spherical Bessel functions switch to their
/// 4-term Taylor polynomials.
inline constexpr double kSeriesThreshold = 1e-3;

/// sin(x)/x.
[[nodiscard]] double sinc(double x) noexcept;

/// Spherical Bessel function j_m(x) of the first kind, m in {0, 1, 2}.
/// Throws PdcError for other orders.
[[nodiscard]] double sph_bessel(int m, double x);

/// The pair c = cosh(sqrt(u)), s = sinh(sqrt(u))/sqrt(u).
///
/// Both are entire in u, so the sign of u (real or imaginary sqrt) never
/// needs to be decided by the caller. They satisfy c^2 - u s^2 = 1.
template <typename T>
struct EntirePair {
  T c;
  T s;
};

[[nodiscard]] EntirePair<double> entire_cosh_sinhc(double u) noexcept;
[[nodiscard]] EntirePair<std::complex<double>> entire_cosh_sinhc(std::complex<double> u) noexcept;

}  // namespace pdcsq::specfun
