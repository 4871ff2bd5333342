#include "pathfollow/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pathfollow {

namespace {
constexpr double kMinSegmentLength = 1e-6;  // consecutive duplicates rejected below this
constexpr double kDedupeTolerance = 1e-9;   // resample end-of-path deduplication
}  // namespace

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

Path::Path(std::vector<Point3> waypoints, double corridor_half_width)
    : waypoints_(std::move(waypoints)), corridor_half_width_(corridor_half_width) {
  if (waypoints_.size() < 2) {
    throw std::invalid_argument("Path: at least two waypoints required");
  }
  if (!(corridor_half_width_ > 0.0) || !std::isfinite(corridor_half_width_)) {
    throw std::invalid_argument("Path: corridor_half_width must be positive and finite");
  }
  cumulative_.resize(waypoints_.size());
  cumulative_[0] = 0.0;
  for (std::size_t i = 0; i < waypoints_.size(); ++i) {
    if (!is_finite(waypoints_[i])) {
      throw std::invalid_argument("Path: waypoint " + std::to_string(i) + " is not finite");
    }
    if (i == 0) continue;
    const double seg = distance(waypoints_[i - 1], waypoints_[i]);
    if (seg <= kMinSegmentLength) {
      throw std::invalid_argument("Path: waypoints " + std::to_string(i - 1) + " and " +
                                  std::to_string(i) + " coincide (segment length " +
                                  std::to_string(seg) + " m)");
    }
    cumulative_[i] = cumulative_[i - 1] + seg;
  }
}

double total_arclength(const Path& path) { return path.cumulative_arclength().back(); }

Point3 point_at_arclength(const Path& path, double s) {
  const auto& wps = path.waypoints();
  const auto& cum = path.cumulative_arclength();
  if (s <= 0.0) return wps.front();
  if (s >= cum.back()) return wps.back();
  // First segment whose far end passes s.
  const auto it = std::lower_bound(cum.begin(), cum.end(), s);
  const std::size_t hi = static_cast<std::size_t>(it - cum.begin());
  if (cum[hi] == s) return wps[hi];
  const std::size_t lo = hi - 1;
  const double seg_len = cum[hi] - cum[lo];
  const double t = (s - cum[lo]) / seg_len;
  return wps[lo] + t * (wps[hi] - wps[lo]);
}

Projection project(const Path& path, const Point3& q) {
  const auto& wps = path.waypoints();
  const auto& cum = path.cumulative_arclength();

  double best_d2 = std::numeric_limits<double>::infinity();
  Projection best;
  for (std::size_t i = 0; i + 1 < wps.size(); ++i) {
    const Vec3 ab = wps[i + 1] - wps[i];
    const double len2 = dot(ab, ab);
    const double t = std::clamp(dot(q - wps[i], ab) / len2, 0.0, 1.0);
    const Point3 foot = wps[i] + t * ab;
    const Vec3 diff = q - foot;
    const double d2 = dot(diff, diff);
    // Strict < keeps the smallest-arclength candidate on exact ties.
    if (d2 < best_d2) {
      best_d2 = d2;
      best.arclength_s = cum[i] + t * (cum[i + 1] - cum[i]);
      best.closest_point = foot;
    }
  }
  best.cross_track_error = std::sqrt(best_d2);
  return best;
}

bool inside_corridor(const Path& path, const Point3& q) {
  return project(path, q).cross_track_error <= path.corridor_half_width();
}

std::vector<Point3> resample_from(const Path& path, const Point3& start, double spacing_dh,
                                  int count_n) {
  if (!(spacing_dh > 0.0)) {
    throw std::invalid_argument("resample_from: spacing_dh must be positive");
  }
  if (count_n < 1) {
    throw std::invalid_argument("resample_from: count_n must be at least 1");
  }
  const double s_start = project(path, start).arclength_s;
  const double total = total_arclength(path);

  std::vector<Point3> out;
  out.reserve(static_cast<std::size_t>(count_n));
  out.push_back(start);
  for (int i = 1; i < count_n; ++i) {
    const double s = s_start + static_cast<double>(i) * spacing_dh;
    const Point3 p = point_at_arclength(path, s);
    if (distance(p, out.back()) <= kDedupeTolerance) break;  // clamped at the path end
    out.push_back(p);
    if (s >= total) break;
  }
  return out;
}

}  // namespace pathfollow
