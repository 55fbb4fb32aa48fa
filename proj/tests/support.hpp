#pragma once

// Shared helpers for the test suites.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "contourgraph/contour.hpp"
#include "contourgraph/rng.hpp"
#include "contourgraph/shapes.hpp"

namespace support {

/// Random smooth closed curve: a radial cosine series with bounded
/// coefficients, guaranteed star-shaped around the origin (radius stays
/// positive), so the point sequence is a valid contour.
inline cng::Contour random_contour(cng::Rng& rng, int n, double base_radius = 100.0) {
  const int harmonics = 5;
  std::vector<double> amp(harmonics), phase(harmonics);
  for (int h = 0; h < harmonics; ++h) {
    amp[h] = (rng.next_double() - 0.5) * 0.5 / (h + 2);
    phase[h] = rng.next_double() * 2.0 * std::numbers::pi;
  }
  const double cx = rng.next_double() * 40.0 - 20.0;
  const double cy = rng.next_double() * 40.0 - 20.0;
  cng::Contour c;
  c.points.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * std::numbers::pi * j / n;
    double r = 1.0;
    for (int h = 0; h < harmonics; ++h) r += amp[h] * std::cos((h + 2) * th + phase[h]);
    c.points.push_back({cx + base_radius * r * std::cos(th), cy + base_radius * r * std::sin(th)});
  }
  return c;
}

inline cng::Contour circle(int n, double radius = 100.0, cng::Point center = {0.0, 0.0}) {
  cng::ShapeSpec spec;
  spec.kind = cng::ShapeKind::circle;
  spec.n_samples = n;
  spec.radius = radius;
  spec.center = center;
  return cng::generate_shape(spec);
}

inline cng::Contour polygon(int sides, int n, double radius = 100.0) {
  cng::ShapeSpec spec;
  spec.kind = cng::ShapeKind::regular_polygon;
  spec.n_sides_or_tips = sides;
  spec.n_samples = n;
  spec.radius = radius;
  return cng::generate_shape(spec);
}

inline cng::Contour star(int tips, double ratio, int n, double radius = 100.0) {
  cng::ShapeSpec spec;
  spec.kind = cng::ShapeKind::star;
  spec.n_sides_or_tips = tips;
  spec.inner_radius_ratio = ratio;
  spec.n_samples = n;
  spec.radius = radius;
  return cng::generate_shape(spec);
}

inline cng::Contour cyclic_shift(const cng::Contour& c, std::size_t shift) {
  cng::Contour out = c;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) out.points[i] = c.points[(i + shift) % n];
  return out;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace support
