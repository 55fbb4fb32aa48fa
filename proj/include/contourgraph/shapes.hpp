#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "contourgraph/common.hpp"
#include "contourgraph/contour.hpp"
#include "contourgraph/rng.hpp"

namespace cng {

enum class ShapeKind { circle, regular_polygon, star };

struct ShapeSpec {
  ShapeKind kind = ShapeKind::circle;
  int n_sides_or_tips = 3;          // ignored for circles
  double inner_radius_ratio = 0.5;  // stars only, in (0,1)
  int n_samples = 100;
  Point center{0.0, 0.0};
  double radius = 1.0;
};

inline void validate_spec(const ShapeSpec& spec) {
  require(spec.n_samples >= 3, "shape: n_samples must be >= 3");
  require(spec.radius > 0.0, "shape: radius must be positive");
  if (spec.kind != ShapeKind::circle) {
    require(spec.n_sides_or_tips >= 3, "shape: needs at least 3 sides/tips");
    require(spec.n_samples >= 3 * spec.n_sides_or_tips,
            "shape: n_samples must be >= 3 * n_sides_or_tips");
  }
  if (spec.kind == ShapeKind::star) {
    require(spec.inner_radius_ratio > 0.0 && spec.inner_radius_ratio < 1.0,
            "shape: inner_radius_ratio must lie in (0,1)");
  }
}

namespace detail {

/// Uniform arc-length sampling of a closed polyline given by its vertices.
/// The first sample coincides with vertices[0].
inline std::vector<Point> sample_polyline(const std::vector<Point>& vertices, int n) {
  const std::size_t m = vertices.size();
  std::vector<double> cum(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    cum[i + 1] = cum[i] + distance(vertices[i], vertices[(i + 1) % m]);
  }
  const double total = cum[m];
  std::vector<Point> out(static_cast<std::size_t>(n));
  std::size_t seg = 0;
  for (int j = 0; j < n; ++j) {
    const double s = total * static_cast<double>(j) / static_cast<double>(n);
    while (seg + 1 < m && cum[seg + 1] <= s) ++seg;
    const Point& a = vertices[seg];
    const Point& b = vertices[(seg + 1) % m];
    const double len = cum[seg + 1] - cum[seg];
    const double t = len > 0.0 ? (s - cum[seg]) / len : 0.0;
    out[static_cast<std::size_t>(j)] = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
  }
  return out;
}

}  // namespace detail

/// Samples the ideal outline with n_samples points, uniformly by arc length,
/// counter-clockwise. Circles start at angle 0; polygons and stars start at
/// their first (outer) vertex.
inline Contour generate_shape(const ShapeSpec& spec) {
  validate_spec(spec);
  Contour c;
  c.points.reserve(static_cast<std::size_t>(spec.n_samples));
  const double two_pi = 2.0 * std::numbers::pi;
  switch (spec.kind) {
    case ShapeKind::circle: {
      for (int j = 0; j < spec.n_samples; ++j) {
        const double a = two_pi * j / spec.n_samples;
        c.points.push_back({spec.center.x + spec.radius * std::cos(a),
                            spec.center.y + spec.radius * std::sin(a)});
      }
      break;
    }
    case ShapeKind::regular_polygon: {
      std::vector<Point> verts;
      for (int k = 0; k < spec.n_sides_or_tips; ++k) {
        const double a = two_pi * k / spec.n_sides_or_tips;
        verts.push_back({spec.center.x + spec.radius * std::cos(a),
                         spec.center.y + spec.radius * std::sin(a)});
      }
      c.points = detail::sample_polyline(verts, spec.n_samples);
      break;
    }
    case ShapeKind::star: {
      std::vector<Point> verts;
      const int tips = spec.n_sides_or_tips;
      for (int k = 0; k < 2 * tips; ++k) {
        const double r =
            (k % 2 == 0) ? spec.radius : spec.radius * spec.inner_radius_ratio;
        const double a = std::numbers::pi * k / tips;
        verts.push_back({spec.center.x + r * std::cos(a),
                         spec.center.y + r * std::sin(a)});
      }
      c.points = detail::sample_polyline(verts, spec.n_samples);
      break;
    }
  }
  return c;
}

/// Redistributes n points uniformly by cumulative arc length along the closed
/// polyline of c. The first output point equals c.points[0].
inline Contour resample(const Contour& c, int n) {
  validate_contour(c);
  require(n >= 3, "resample: n must be >= 3");
  Contour out;
  out.label = c.label;
  out.id = c.id;
  out.points = detail::sample_polyline(c.points, n);
  return out;
}

namespace detail {

inline std::vector<Point> reversed_cycle(const std::vector<Point>& p) {
  const std::size_t m = p.size();
  std::vector<Point> r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = p[(m - i) % m];
  return r;
}

/// Total point-to-point distance of b against a after a cyclic shift.
inline double alignment_cost(const std::vector<Point>& a,
                             const std::vector<Point>& b, std::size_t shift) {
  const std::size_t m = a.size();
  double cost = 0.0;
  for (std::size_t i = 0; i < m; ++i) cost += distance(a[i], b[(i + shift) % m]);
  return cost;
}

}  // namespace detail

/// Pointwise convex combination (1-alpha)*a + alpha*b. Both contours are
/// resampled to max(|a|,|b|) points; b is then aligned to a by the cyclic
/// shift and traversal orientation that minimize the total point-to-point
/// distance, so corresponding points blend instead of opposite ones.
inline Contour interpolate(const Contour& a, const Contour& b, double alpha) {
  require(alpha >= 0.0 && alpha <= 1.0, "interpolate: alpha must be in [0,1]");
  const int m = static_cast<int>(std::max(a.size(), b.size()));
  const Contour ra = resample(a, m);
  const Contour rb = resample(b, m);

  const std::vector<Point> forward = rb.points;
  const std::vector<Point> backward = detail::reversed_cycle(rb.points);
  double best_cost = std::numeric_limits<double>::infinity();
  const std::vector<Point>* best_orient = &forward;
  std::size_t best_shift = 0;
  for (const auto* orient : {&forward, &backward}) {
    for (std::size_t s = 0; s < static_cast<std::size_t>(m); ++s) {
      const double cost = detail::alignment_cost(ra.points, *orient, s);
      if (cost < best_cost) {
        best_cost = cost;
        best_orient = orient;
        best_shift = s;
      }
    }
  }

  Contour out;
  out.points.resize(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    const Point& pa = ra.points[i];
    const Point& pb = (*best_orient)[(i + best_shift) % static_cast<std::size_t>(m)];
    out.points[i] = {(1.0 - alpha) * pa.x + alpha * pb.x,
                     (1.0 - alpha) * pa.y + alpha * pb.y};
  }
  return out;
}

enum class PerturbKind { rotate, scale, noise, degrade_continuous, degrade_random };

struct PerturbSpec {
  PerturbKind kind = PerturbKind::rotate;
  double angle_deg = 0.0;       // rotate
  double factor = 1.0;          // scale, > 0
  int noise_level = 0;          // noise, integer pixel amplitude >= 0
  double degrade_fraction = 0.0;  // degradation, in [0,1)
  std::uint64_t seed = 0;       // fully determines stochastic perturbations
};

inline void validate_perturb(const PerturbSpec& p) {
  switch (p.kind) {
    case PerturbKind::scale:
      require(p.factor > 0.0, "perturb: scale factor must be positive");
      break;
    case PerturbKind::noise:
      require(p.noise_level >= 0, "perturb: noise_level must be >= 0");
      break;
    case PerturbKind::degrade_continuous:
    case PerturbKind::degrade_random:
      require(p.degrade_fraction >= 0.0 && p.degrade_fraction < 1.0,
              "perturb: degrade_fraction must lie in [0,1)");
      break;
    case PerturbKind::rotate:
      break;
  }
}

/// Applies one geometric or degradation transform. Rotation and scaling act
/// on the real coordinates about the contour centroid (no re-rasterization),
/// so pairwise distances transform exactly. Stochastic kinds are fully
/// determined by (seed, spec).
inline Contour perturb(const Contour& c, const PerturbSpec& p) {
  validate_contour(c);
  validate_perturb(p);
  const std::size_t n = c.size();
  Contour out;
  out.label = c.label;
  out.id = c.id;

  switch (p.kind) {
    case PerturbKind::rotate: {
      const Point m = centroid(c);
      const double th = p.angle_deg * std::numbers::pi / 180.0;
      const double cs = std::cos(th), sn = std::sin(th);
      out.points.reserve(n);
      for (const Point& q : c.points) {
        const double dx = q.x - m.x, dy = q.y - m.y;
        out.points.push_back({m.x + cs * dx - sn * dy, m.y + sn * dx + cs * dy});
      }
      break;
    }
    case PerturbKind::scale: {
      const Point m = centroid(c);
      out.points.reserve(n);
      for (const Point& q : c.points) {
        out.points.push_back({m.x + p.factor * (q.x - m.x),
                              m.y + p.factor * (q.y - m.y)});
      }
      break;
    }
    case PerturbKind::noise: {
      Rng rng(p.seed);
      out.points.reserve(n);
      for (const Point& q : c.points) {
        const double dx = static_cast<double>(rng.next_int(-p.noise_level, p.noise_level));
        const double dy = static_cast<double>(rng.next_int(-p.noise_level, p.noise_level));
        out.points.push_back({q.x + dx, q.y + dy});
      }
      break;
    }
    case PerturbKind::degrade_continuous: {
      const std::size_t m = static_cast<std::size_t>(p.degrade_fraction * static_cast<double>(n));
      require(n - m >= 3, "perturb: degradation would leave fewer than 3 points");
      Rng rng(p.seed);
      const std::size_t start = rng.next_below(n);
      std::vector<bool> removed(n, false);
      for (std::size_t k = 0; k < m; ++k) removed[(start + k) % n] = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (!removed[i]) out.points.push_back(c.points[i]);
      }
      break;
    }
    case PerturbKind::degrade_random: {
      const std::size_t m = static_cast<std::size_t>(p.degrade_fraction * static_cast<double>(n));
      require(n - m >= 3, "perturb: degradation would leave fewer than 3 points");
      Rng rng(p.seed);
      std::vector<std::size_t> idx(n);
      for (std::size_t i = 0; i < n; ++i) idx[i] = i;
      rng.shuffle(idx);
      std::vector<bool> removed(n, false);
      for (std::size_t k = 0; k < m; ++k) removed[idx[k]] = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (!removed[i]) out.points.push_back(c.points[i]);
      }
      break;
    }
  }
  require(out.size() >= 3, "perturb: result shorter than 3 points");
  return out;
}

}  // namespace cng
