#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "contourgraph/shapes.hpp"
#include "support.hpp"

using namespace cng;

TEST_CASE("circle generator places every point on the circle") {
  ShapeSpec spec;
  spec.kind = ShapeKind::circle;
  spec.n_samples = 100;
  spec.radius = 50.0;
  spec.center = {10.0, -4.0};
  const auto c = generate_shape(spec);
  REQUIRE(c.size() == 100);
  for (const auto& p : c.points) {
    CHECK(std::abs(distance(p, spec.center) - spec.radius) < 1e-9);
  }
}

TEST_CASE("square generator hits all four vertices") {
  const auto c = support::polygon(4, 100, 50.0);
  REQUIRE(c.size() == 100);
  int hits = 0;
  for (int k = 0; k < 4; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 4;
    const Point v{50.0 * std::cos(a), 50.0 * std::sin(a)};
    for (const auto& p : c.points) {
      if (distance(p, v) < 1e-9) {
        ++hits;
        break;
      }
    }
  }
  CHECK(hits == 4);
}

TEST_CASE("star generator alternates radii with 10 local extrema") {
  const auto c = support::star(5, 0.5, 100, 60.0);
  const std::size_t n = c.size();
  int extrema = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = distance(c.at_wrapped(static_cast<std::ptrdiff_t>(i) - 1), {0.0, 0.0});
    const double here = distance(c.points[i], {0.0, 0.0});
    const double next = distance(c.at_wrapped(static_cast<std::ptrdiff_t>(i) + 1), {0.0, 0.0});
    if ((here > prev && here > next) || (here < prev && here < next)) ++extrema;
  }
  CHECK(extrema == 10);
}

TEST_CASE("shape spec validation") {
  ShapeSpec spec;
  spec.kind = ShapeKind::regular_polygon;
  spec.n_sides_or_tips = 5;
  spec.n_samples = 10;  // < 3 * 5
  CHECK_THROWS_AS(generate_shape(spec), std::invalid_argument);
  spec.n_samples = 30;
  CHECK_NOTHROW(generate_shape(spec));
  spec.kind = ShapeKind::star;
  spec.inner_radius_ratio = 1.2;
  CHECK_THROWS_AS(generate_shape(spec), std::invalid_argument);
}

TEST_CASE("resampling an already-uniform contour to its own length is identity") {
  const auto c = support::circle(64, 30.0);
  const auto r = resample(c, 64);
  REQUIRE(r.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(distance(c.points[i], r.points[i]) < 1e-9);
  }
}

TEST_CASE("resampling the unit square outline to 4 points recovers the corners") {
  Contour sq;
  sq.points = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  const auto r = resample(sq, 4);
  REQUIRE(r.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(distance(r.points[i], sq.points[i]) < 1e-12);
  }
}

TEST_CASE("downsampled circle stays on the circle") {
  const auto c = support::circle(100, 42.0);
  const auto r = resample(c, 50);
  REQUIRE(r.size() == 50);
  // The polyline chords lie slightly inside the ideal circle; the analytic
  // check bounds the radial error by the sagitta of one segment.
  const double sagitta = 42.0 * (1.0 - std::cos(std::numbers::pi / 100));
  for (const auto& p : r.points) {
    const double d = distance(p, {0.0, 0.0});
    CHECK(d <= 42.0 + 1e-6);
    CHECK(d >= 42.0 - sagitta - 1e-6);
  }
  CHECK(distance(r.points[0], c.points[0]) == 0.0);
}

TEST_CASE("interpolation endpoints reproduce the inputs") {
  const auto a = support::circle(80, 40.0);
  const auto b = support::polygon(4, 60, 40.0);
  const int m = 80;

  const auto at0 = interpolate(a, b, 0.0);
  const auto ra = resample(a, m);
  REQUIRE(at0.size() == ra.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    CHECK(distance(at0.points[i], ra.points[i]) < 1e-9);
  }

  const auto at1 = interpolate(a, b, 1.0);
  // alpha = 1 returns the aligned resampled b: same point multiset.
  const auto rb = resample(b, m);
  for (const auto& p : at1.points) {
    double best = 1e9;
    for (const auto& q : rb.points) best = std::min(best, distance(p, q));
    CHECK(best < 1e-9);
  }
}

TEST_CASE("circle-square midpoint lies in the annulus between the outlines") {
  const double r = 50.0;
  const auto a = support::circle(100, r);
  const auto b = support::polygon(4, 100, r);
  const auto mid = interpolate(a, b, 0.5);
  for (const auto& p : mid.points) {
    const double rho = distance(p, {0.0, 0.0});
    const double theta = std::atan2(p.y, p.x);
    // Radial extent of the square at this angle: vertices sit at k*pi/2, the
    // apothem at the 45-degree mid-edge directions.
    const double local = std::fmod(std::abs(theta), std::numbers::pi / 2) - std::numbers::pi / 4;
    const double square_r = (r * std::cos(std::numbers::pi / 4)) / std::cos(local);
    const double slack = 2e-3 * r;  // alignment pairs points at slightly offset angles
    CHECK(rho <= std::max(r, square_r) + slack);
    CHECK(rho >= std::min(r, square_r) - slack);
  }
}

TEST_CASE("rotation preserves pairwise distances") {
  Rng rng(3);
  const auto c = support::random_contour(rng, 60);
  for (double angle : {360.0, 7.0, 201.5}) {
    PerturbSpec p;
    p.kind = PerturbKind::rotate;
    p.angle_deg = angle;
    const auto r = perturb(c, p);
    REQUIRE(r.size() == c.size());
    for (std::size_t i = 0; i < c.size(); i += 7) {
      for (std::size_t j = i + 1; j < c.size(); j += 11) {
        CHECK(support::rel_diff(distance(c.points[i], c.points[j]),
                                distance(r.points[i], r.points[j])) < 1e-9);
      }
    }
  }
}

TEST_CASE("scaling multiplies pairwise distances by the factor") {
  Rng rng(5);
  const auto c = support::random_contour(rng, 40);
  PerturbSpec p;
  p.kind = PerturbKind::scale;
  p.factor = 2.0;
  const auto s = perturb(c, p);
  for (std::size_t i = 0; i < c.size(); i += 3) {
    for (std::size_t j = i + 1; j < c.size(); j += 5) {
      CHECK(support::rel_diff(2.0 * distance(c.points[i], c.points[j]),
                              distance(s.points[i], s.points[j])) < 1e-12);
    }
  }
}

TEST_CASE("zero noise leaves the contour unchanged") {
  Rng rng(8);
  const auto c = support::random_contour(rng, 30);
  PerturbSpec p;
  p.kind = PerturbKind::noise;
  p.noise_level = 0;
  p.seed = 99;
  const auto r = perturb(c, p);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(r.points[i].x == c.points[i].x);
    CHECK(r.points[i].y == c.points[i].y);
  }
}

TEST_CASE("noise offsets are integers within the level") {
  Rng rng(9);
  const auto c = support::random_contour(rng, 50);
  PerturbSpec p;
  p.kind = PerturbKind::noise;
  p.noise_level = 3;
  p.seed = 1234;
  const auto r = perturb(c, p);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double dx = r.points[i].x - c.points[i].x;
    const double dy = r.points[i].y - c.points[i].y;
    CHECK(dx == std::floor(dx));
    CHECK(std::abs(dx) <= 3.0);
    CHECK(dy == std::floor(dy));
    CHECK(std::abs(dy) <= 3.0);
  }
}

TEST_CASE("degradation removes the right count and keeps order") {
  Rng rng(10);
  const auto c = support::random_contour(rng, 600);

  PerturbSpec p;
  p.kind = PerturbKind::degrade_random;
  p.degrade_fraction = 0.1;
  p.seed = 7;
  const auto r = perturb(c, p);
  CHECK(r.size() == 540);
  // Surviving points appear in their original order.
  std::size_t cursor = 0;
  for (const auto& q : r.points) {
    while (cursor < c.size() &&
           (c.points[cursor].x != q.x || c.points[cursor].y != q.y)) {
      ++cursor;
    }
    REQUIRE(cursor < c.size());
    ++cursor;
  }

  p.kind = PerturbKind::degrade_continuous;
  const auto rc = perturb(c, p);
  CHECK(rc.size() == 540);
  // Removed indices form one contiguous cyclic run: the survivors contain at
  // most one gap in the original index sequence.
  std::vector<std::size_t> kept;
  cursor = 0;
  for (const auto& q : rc.points) {
    while (c.points[cursor].x != q.x || c.points[cursor].y != q.y) ++cursor;
    kept.push_back(cursor++);
  }
  // One contiguous removed run (possibly wrapping) leaves at most one gap in
  // the surviving index sequence.
  int gaps = 0;
  for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
    if (kept[i + 1] != kept[i] + 1) ++gaps;
  }
  CHECK(gaps <= 1);
}

TEST_CASE("stochastic perturbations are reproducible from the seed") {
  Rng rng(12);
  const auto c = support::random_contour(rng, 80);
  for (auto kind : {PerturbKind::noise, PerturbKind::degrade_continuous, PerturbKind::degrade_random}) {
    PerturbSpec p;
    p.kind = kind;
    p.noise_level = 2;
    p.degrade_fraction = 0.2;
    p.seed = 4242;
    const auto a = perturb(c, p);
    const auto b = perturb(c, p);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a.points[i].x == b.points[i].x);
      CHECK(a.points[i].y == b.points[i].y);
    }
    p.seed = 4243;
    const auto d = perturb(c, p);
    bool differs = d.size() != a.size();
    for (std::size_t i = 0; !differs && i < a.size(); ++i) {
      differs = a.points[i].x != d.points[i].x || a.points[i].y != d.points[i].y;
    }
    CHECK(differs);
  }
}

TEST_CASE("degradation below the 3-point floor is rejected") {
  Contour tiny;
  tiny.points = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  PerturbSpec p;
  p.kind = PerturbKind::degrade_continuous;
  p.degrade_fraction = 0.5;  // would leave 2 points
  p.seed = 1;
  CHECK_THROWS_AS(perturb(tiny, p), std::invalid_argument);
}
