#pragma once
/// Polyline path representation with arc-length queries, closest-point
/// projection, cross-track error, corridor membership and lookahead
/// resampling. 3D throughout; flat scenes simply carry z = 0.

#include <cstddef>
#include <vector>

namespace pathfollow {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

using Point3 = Vec3;

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
constexpr Vec3 operator*(const Vec3& v, double s) { return s * v; }
constexpr bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& v);
double distance(const Vec3& a, const Vec3& b);
bool is_finite(const Vec3& v);

/// Result of projecting a query point onto a path.
struct Projection {
  double arclength_s = 0.0;       ///< arc length of the closest on-path point [m]
  Point3 closest_point{};         ///< the closest on-path point
  double cross_track_error = 0.0; ///< Euclidean distance from query to closest point [m]
};

/// Immutable polyline path with a safety corridor.
///
/// Waypoints are ordered 3D points (at least two, consecutive points
/// distinct); the cumulative arc length is precomputed at construction.
/// Instances never mutate: a path that changes across frames is handled
/// by constructing a new Path. Safe for concurrent reads.
class Path {
 public:
  /// Throws std::invalid_argument on fewer than two waypoints, non-finite
  /// coordinates, consecutive duplicates (segment shorter than 1e-6 m) or
  /// a non-positive corridor half-width.
  Path(std::vector<Point3> waypoints, double corridor_half_width);

  const std::vector<Point3>& waypoints() const { return waypoints_; }
  const std::vector<double>& cumulative_arclength() const { return cumulative_; }
  double corridor_half_width() const { return corridor_half_width_; }

 private:
  std::vector<Point3> waypoints_;
  std::vector<double> cumulative_;
  double corridor_half_width_;
};

/// Arc length of the full polyline.
double total_arclength(const Path& path);

/// Linear interpolation along the polyline at arc length s, clamped to
/// [0, total]: s < 0 returns the first waypoint, s > total the last.
Point3 point_at_arclength(const Path& path, double s);

/// Closest point on the path to q, minimizing Euclidean distance over all
/// segments. Distance ties are broken toward the smallest arc length.
Projection project(const Path& path, const Point3& q);

/// True iff the cross-track error of q is at most the corridor half-width
/// (boundary inclusive).
bool inside_corridor(const Path& path, const Point3& q);

/// Resamples the path ahead of `start` at regular arc-length intervals.
///
/// Element 0 is `start` itself; element i is the path point an arc length
/// i * spacing_dh beyond the projection of `start`. The list ends early
/// once the path end is reached (the clamped final point is emitted once),
/// so the result holds between 1 and count_n points.
std::vector<Point3> resample_from(const Path& path, const Point3& start, double spacing_dh,
                                  int count_n);

}  // namespace pathfollow
