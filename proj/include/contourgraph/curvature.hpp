#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "contourgraph/common.hpp"
#include "contourgraph/contour.hpp"

namespace cng {

/// Per-point curvature of a contour, same length and order as the contour.
/// sigma is the Gaussian low-pass scale in frequency bins. flagged marks
/// degenerate handling (epsilon-clamped denominators, constant-signal
/// normalization).
struct CurvatureSignal {
  std::vector<double> values;
  double sigma = 0.0;
  bool normalized = false;
  bool flagged = false;
};

inline double default_curvature_sigma(std::size_t n) {
  return static_cast<double>(n) / 64.0;
}

namespace detail {

/// Direct O(n^2) discrete Fourier transform; contours here are short enough
/// that no FFT machinery is warranted. sign = -1 forward, +1 inverse (the
/// caller divides by n for the inverse).
inline std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in,
                                             int sign) {
  const std::size_t n = in.size();
  std::vector<std::complex<double>> twiddle(n), out(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double a = sign * 2.0 * std::numbers::pi * static_cast<double>(m) /
                     static_cast<double>(n);
    twiddle[m] = {std::cos(a), std::sin(a)};
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) acc += in[j] * twiddle[(j * k) % n];
    out[k] = acc;
  }
  return out;
}

}  // namespace detail

/// Curvature via Fourier-domain differentiation: the contour is treated as
/// the complex signal u = x + iy, its spectrum is attenuated by a Gaussian
/// low-pass of scale sigma, first and second derivatives are obtained by
/// multiplying the spectrum with (i 2 pi f) and its square, and
/// kappa = (x'y'' - y'x'') / (x'^2 + y'^2)^(3/2).
/// sigma <= 0 selects the default n/64 bins.
inline CurvatureSignal curvature_signal(const Contour& c, double sigma = 0.0) {
  validate_contour(c);
  const std::size_t n = c.size();
  require(n >= 8, "curvature: contour must have at least 8 points");
  if (sigma <= 0.0) sigma = default_curvature_sigma(n);

  std::vector<std::complex<double>> u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = {c.points[j].x, c.points[j].y};
  const auto spectrum = detail::dft(u, -1);

  std::vector<std::complex<double>> d1(n), d2(n);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t k = 0; k < n; ++k) {
    // Signed frequency; the Nyquist bin of even-length signals gets a zero
    // derivative multiplier.
    const double f = (2 * k <= n) ? static_cast<double>(k)
                                  : static_cast<double>(k) - static_cast<double>(n);
    const double gauss = std::exp(-(f * f) / (2.0 * sigma * sigma));
    const std::complex<double> filtered = spectrum[k] * gauss;
    const bool nyquist = (n % 2 == 0) && (2 * k == n);
    const std::complex<double> mult =
        nyquist ? std::complex<double>{0.0, 0.0}
                : std::complex<double>{0.0, two_pi * f / static_cast<double>(n)};
    d1[k] = mult * filtered;
    d2[k] = mult * mult * filtered;
  }
  auto first = detail::dft(d1, +1);
  auto second = detail::dft(d2, +1);

  CurvatureSignal out;
  out.sigma = sigma;
  out.values.resize(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double xp = first[j].real() * inv_n;
    const double yp = first[j].imag() * inv_n;
    const double xpp = second[j].real() * inv_n;
    const double ypp = second[j].imag() * inv_n;
    double speed2 = xp * xp + yp * yp;
    if (speed2 < 1e-24) {  // derivative magnitude below 1e-12
      speed2 = 1e-24;
      out.flagged = true;
    }
    out.values[j] = (xp * ypp - yp * xpp) / (speed2 * std::sqrt(speed2));
  }
  return out;
}

/// Affine min-max rescale to [0,1]. A constant signal has no range to map;
/// it becomes all 0.5 and the result is flagged.
inline CurvatureSignal normalize_signal(const CurvatureSignal& s) {
  require(!s.values.empty(), "normalize: empty signal");
  CurvatureSignal out = s;
  out.normalized = true;
  const auto [lo_it, hi_it] = std::minmax_element(s.values.begin(), s.values.end());
  const double lo = *lo_it, hi = *hi_it;
  if (hi == lo) {
    std::fill(out.values.begin(), out.values.end(), 0.5);
    out.flagged = true;
    return out;
  }
  const double span = hi - lo;
  for (double& v : out.values) v = (v - lo) / span;
  return out;
}

}  // namespace cng
