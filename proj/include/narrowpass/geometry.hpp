#pragma once

#include <array>
#include <cmath>
#include <optional>

namespace narrowpass {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double norm_sq() const { return x * x + y * y; }
};

inline Vec2 unit_from_angle(double a) { return {std::cos(a), std::sin(a)}; }

struct Segment {
  Vec2 a;
  Vec2 b;
};

// Oriented rectangle: center, half extents along local axes, heading of the
// local x axis in world frame.
struct Obb {
  Vec2 center;
  double half_length = 0.0;  // along heading
  double half_width = 0.0;   // perpendicular
  double heading = 0.0;

  std::array<Vec2, 4> corners() const {
    const Vec2 ex = unit_from_angle(heading);
    const Vec2 ey{-ex.y, ex.x};
    const Vec2 dl = ex * half_length;
    const Vec2 dw = ey * half_width;
    return {center + dl + dw, center + dl - dw, center - dl - dw, center - dl + dw};
  }

  std::array<Segment, 4> edges() const {
    const auto c = corners();
    return {Segment{c[0], c[1]}, Segment{c[1], c[2]}, Segment{c[2], c[3]}, Segment{c[3], c[0]}};
  }
};

// Separating-axis test. Touching boxes (zero-area overlap) do not count as
// overlapping.
bool obb_overlap(const Obb& a, const Obb& b);

bool point_in_obb(Vec2 p, const Obb& box);

// First intersection of the ray (origin, unit dir) with a segment, as the
// distance t >= 0 along the ray. Empty when there is no hit.
std::optional<double> ray_segment_intersection(Vec2 origin, Vec2 dir, const Segment& seg);

// First intersection distance of the ray with the rectangle boundary.
std::optional<double> ray_obb_intersection(Vec2 origin, Vec2 dir, const Obb& box);

// Closest point of the segment to p.
Vec2 closest_point_on_segment(Vec2 p, const Segment& seg);

// Smallest |q - apex| over points q of `seg` that lie inside the angular
// sector (apex, center direction `dir_angle`, full opening `fov`). Empty when
// the segment does not enter the sector.
std::optional<double> sector_segment_min_distance(Vec2 apex, double dir_angle, double fov,
                                                  const Segment& seg);

// Wrap to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * M_PI);
  return a;
}

}  // namespace narrowpass
