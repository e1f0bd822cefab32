// Copyright 2026 The navfuse Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace navfuse {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
};

// Normalizes an angle into (-pi, pi].
double wrap_angle(double a);

// Absolute wrapped difference |a - b| in [0, pi].
double angle_diff(double a, double b);

struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // radians, normalized to (-pi, pi]

  static Pose2D make(double x, double y, double heading) {
    return Pose2D{x, y, wrap_angle(heading)};
  }
};

// Rigid transform into the frame anchored at `frame` (translate by -position,
// rotate by -heading).
Vec2 to_agent_frame(const Vec2& p, const Pose2D& frame);
Pose2D to_agent_frame(const Pose2D& p, const Pose2D& frame);

// Inverse of to_agent_frame.
Vec2 from_agent_frame(const Vec2& p_local, const Pose2D& frame);
Pose2D from_agent_frame(const Pose2D& p_local, const Pose2D& frame);

// Resamples a point chain to `count` points equally spaced by arc length.
// First and last input points are preserved exactly.
// Throws DegeneratePolyline when the total arc length is zero, and
// std::invalid_argument when preconditions (>= 2 distinct points, count >= 2)
// are violated.
std::vector<Vec2> resample_polyline(const std::vector<Vec2>& points, int count);

// Euclidean distance from p to segment [a, b]; degenerate segments behave as
// points.
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

// Closest point on segment [a, b] to p.
Vec2 closest_point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b);

// Total arc length of a point chain.
double arc_length(const std::vector<Vec2>& points);

// Oriented rectangle (vehicle footprint).
struct OrientedBox {
  Vec2 center;
  double heading = 0.0;
  double length = 0.0;  // extent along heading
  double width = 0.0;   // extent across heading

  std::vector<Vec2> corners() const;
};

// Positive-area overlap test via the separating axis theorem.
bool boxes_overlap(const OrientedBox& a, const OrientedBox& b);

}  // namespace navfuse
