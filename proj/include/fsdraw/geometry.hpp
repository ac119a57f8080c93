#pragma once

#include <cmath>
#include <numbers>

namespace fsdraw {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const { return std::hypot(x, y); }
};

inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline Vec2 unit_vec(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Wrap into [0, 2pi).
double wrap_two_pi(double a);

// Wrap a direction into its undirected representative in [0, pi).
double wrap_pi(double a);

// Angle on the left side of a walk corner, in (0, 2pi].  dir_in / dir_out
// are the directions of the darts entering and leaving the corner.
double corner_angle(double dir_in, double dir_out);

// Turning from direction `from` to direction `to`, in (-pi, pi].
double signed_turn(double from, double to);

// Distance between two directions taken mod pi (undirected lines).
double angle_dist_mod_pi(double a, double b);

// Closed-segment intersection with a relative tolerance on the
// orientation tests.  Shared-endpoint handling is the caller's business.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps);

// Two segments leaving a common point p toward q1 and q2: true when they
// overlap along a common ray rather than merely touching at p.
bool collinear_overlap_at(Vec2 p, Vec2 q1, Vec2 q2, double eps);

}  // namespace fsdraw
