#include "narrowpass/geometry.hpp"

#include <algorithm>
#include <limits>

namespace narrowpass {

namespace {

// Project the corners of `box` onto `axis` and return the interval.
std::pair<double, double> project(const Obb& box, Vec2 axis) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Vec2 c : box.corners()) {
    const double t = c.dot(axis);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return {lo, hi};
}

bool separated_on(const Obb& a, const Obb& b, Vec2 axis) {
  const auto [alo, ahi] = project(a, axis);
  const auto [blo, bhi] = project(b, axis);
  return ahi <= blo || bhi <= alo;
}

}  // namespace

bool obb_overlap(const Obb& a, const Obb& b) {
  const Vec2 ax = unit_from_angle(a.heading);
  const Vec2 bx = unit_from_angle(b.heading);
  const Vec2 axes[4] = {ax, {-ax.y, ax.x}, bx, {-bx.y, bx.x}};
  for (const Vec2 axis : axes) {
    if (separated_on(a, b, axis)) return false;
  }
  return true;
}

bool point_in_obb(Vec2 p, const Obb& box) {
  const Vec2 ex = unit_from_angle(box.heading);
  const Vec2 ey{-ex.y, ex.x};
  const Vec2 d = p - box.center;
  return std::abs(d.dot(ex)) <= box.half_length && std::abs(d.dot(ey)) <= box.half_width;
}

std::optional<double> ray_segment_intersection(Vec2 origin, Vec2 dir, const Segment& seg) {
  // origin + t*dir == a + u*(b-a), t >= 0, u in [0,1]
  const Vec2 e = seg.b - seg.a;
  const double denom = dir.cross(e);
  if (denom == 0.0) return std::nullopt;  // parallel (grazing hits resolve via neighbors)
  const Vec2 d = seg.a - origin;
  const double t = d.cross(e) / denom;
  const double u = d.cross(dir) / denom;
  if (t < 0.0 || u < 0.0 || u > 1.0) return std::nullopt;
  return t;
}

std::optional<double> ray_obb_intersection(Vec2 origin, Vec2 dir, const Obb& box) {
  std::optional<double> best;
  for (const Segment& e : box.edges()) {
    if (auto t = ray_segment_intersection(origin, dir, e)) {
      if (!best || *t < *best) best = *t;
    }
  }
  return best;
}

Vec2 closest_point_on_segment(Vec2 p, const Segment& seg) {
  const Vec2 e = seg.b - seg.a;
  const double len_sq = e.norm_sq();
  if (len_sq == 0.0) return seg.a;
  const double t = std::clamp((p - seg.a).dot(e) / len_sq, 0.0, 1.0);
  return seg.a + e * t;
}

std::optional<double> sector_segment_min_distance(Vec2 apex, double dir_angle, double fov,
                                                  const Segment& seg) {
  const double half = 0.5 * fov;
  const auto in_sector = [&](Vec2 q) {
    const Vec2 d = q - apex;
    if (d.norm_sq() == 0.0) return true;
    return std::abs(wrap_angle(std::atan2(d.y, d.x) - dir_angle)) <= half;
  };

  double best = std::numeric_limits<double>::infinity();

  // Candidate 1: unconstrained closest point of the segment, if visible.
  const Vec2 cp = closest_point_on_segment(apex, seg);
  if (in_sector(cp)) best = std::min(best, (cp - apex).norm());

  // Candidate 2: segment endpoints, if visible.
  for (const Vec2 q : {seg.a, seg.b}) {
    if (in_sector(q)) best = std::min(best, (q - apex).norm());
  }

  // Candidate 3: intersections of the sector boundary rays with the segment.
  for (const double a : {dir_angle - half, dir_angle + half}) {
    if (auto t = ray_segment_intersection(apex, unit_from_angle(a), seg)) {
      best = std::min(best, *t);
    }
  }

  if (!std::isfinite(best)) return std::nullopt;
  return best;
}

}  // namespace narrowpass
