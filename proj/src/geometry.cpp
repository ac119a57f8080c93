#include "fsdraw/geometry.hpp"

#include <algorithm>

namespace fsdraw {

double wrap_two_pi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

double wrap_pi(double a) {
  double r = std::fmod(a, kPi);
  if (r < 0) r += kPi;
  if (r == kPi) r = 0.0;
  return r;
}

double corner_angle(double dir_in, double dir_out) {
  double r = wrap_two_pi(dir_in + kPi - dir_out);
  return r == 0.0 ? kTwoPi : r;
}

double signed_turn(double from, double to) {
  double d = std::remainder(to - from, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  return d;
}

double angle_dist_mod_pi(double a, double b) {
  return std::fabs(std::remainder(a - b, kPi));
}

namespace {

int orient(Vec2 a, Vec2 b, Vec2 c, double eps) {
  double v = cross(b - a, c - a);
  double scale = (b - a).norm() * std::max((c - a).norm(), (c - b).norm());
  if (std::fabs(v) <= eps * std::max(scale, 1e-300)) return 0;
  return v > 0 ? 1 : -1;
}

// p assumed collinear with [a, b].
bool on_segment(Vec2 a, Vec2 b, Vec2 p, double eps) {
  double slack = eps * std::max(1.0, (b - a).norm());
  return p.x >= std::min(a.x, b.x) - slack && p.x <= std::max(a.x, b.x) + slack &&
         p.y >= std::min(a.y, b.y) - slack && p.y <= std::max(a.y, b.y) + slack;
}

}  // namespace

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps) {
  int o1 = orient(a, b, c, eps);
  int o2 = orient(a, b, d, eps);
  int o3 = orient(c, d, a, eps);
  int o4 = orient(c, d, b, eps);

  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c, eps)) return true;
  if (o2 == 0 && on_segment(a, b, d, eps)) return true;
  if (o3 == 0 && on_segment(c, d, a, eps)) return true;
  if (o4 == 0 && on_segment(c, d, b, eps)) return true;
  return false;
}

bool collinear_overlap_at(Vec2 p, Vec2 q1, Vec2 q2, double eps) {
  Vec2 u = q1 - p;
  Vec2 v = q2 - p;
  double scale = std::max(u.norm() * v.norm(), 1e-300);
  if (std::fabs(cross(u, v)) > eps * scale) return false;
  return dot(u, v) > 0;
}

}  // namespace fsdraw
