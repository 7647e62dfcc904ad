#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "conormal/errors.hpp"

namespace conormal {

using LatticePoint = std::pair<std::int64_t, std::int64_t>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Axis direction of a rectilinear segment.
enum class Axis : int { PlusX = 0, PlusY = 1, MinusX = 2, MinusY = 3 };

inline Axis segment_axis(const LatticePoint& a, const LatticePoint& b) {
  if (a.second == b.second) return b.first > a.first ? Axis::PlusX : Axis::MinusX;
  return b.second > a.second ? Axis::PlusY : Axis::MinusY;
}

/// Closed axis-aligned lattice polygon in general position: segments
/// alternate horizontal/vertical and no two segments share a line.
/// Within the rectilinear class this exactly rules out dangerous
/// self-tangencies. Corner order is the orientation.
class RectCurve {
 public:
  static RectCurve validate(std::vector<LatticePoint> corners) {
    if (corners.size() >= 2 && corners.front() == corners.back())
      corners.pop_back();  // tolerate explicit ring closure
    // Interior segments first, so `[(0,0),(1,1)]` reports NotAxisAligned.
    for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
      const auto& a = corners[i];
      const auto& b = corners[i + 1];
      if ((a.first == b.first) == (a.second == b.second))
        throw ValidationError(Err::NotAxisAligned,
                              "corner pair differs in zero or two coordinates");
    }
    if (corners.size() >= 2) {
      const auto& a = corners.back();
      const auto& b = corners.front();
      if ((a.first == b.first) == (a.second == b.second))
        throw ValidationError(Err::NotClosed,
                              "closing segment is not axis-aligned");
    }
    if (corners.size() < 4)
      throw ValidationError(Err::TooFewCorners, "need at least 4 corners");
    std::set<std::int64_t> xs, ys;
    const std::size_t n = corners.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = corners[i];
      const auto& b = corners[(i + 1) % n];
      if (a.second == b.second) {
        if (!ys.insert(a.second).second)
          throw ValidationError(Err::CollinearSegments,
                                "two horizontal segments share a line");
      } else {
        if (!xs.insert(a.first).second)
          throw ValidationError(Err::CollinearSegments,
                                "two vertical segments share a line");
      }
    }
    return RectCurve(std::move(corners));
  }

  const std::vector<LatticePoint>& corners() const { return corners_; }
  std::size_t size() const { return corners_.size(); }

  Axis axis(std::size_t segment) const {
    return segment_axis(corners_[segment], corners_[(segment + 1) % size()]);
  }

  /// Turn sign at the corner following segment i: +1 left, -1 right.
  int turn_after(std::size_t segment) const {
    static constexpr int dx[4] = {1, 0, -1, 0};
    static constexpr int dy[4] = {0, 1, 0, -1};
    int a = static_cast<int>(axis(segment));
    int b = static_cast<int>(axis((segment + 1) % size()));
    int cross = dx[a] * dy[b] - dy[a] * dx[b];
    return cross > 0 ? 1 : -1;
  }

  RectCurve reversed() const {
    std::vector<LatticePoint> rev(corners_.rbegin(), corners_.rend());
    return RectCurve(std::move(rev));
  }

  RectCurve translated(std::int64_t dx, std::int64_t dy) const {
    auto c = corners_;
    for (auto& p : c) { p.first += dx; p.second += dy; }
    return RectCurve(std::move(c));
  }

  /// Mirror across the x axis. Reverses orientation of the shape while the
  /// corner order still defines the traversal.
  RectCurve mirrored_y() const {
    auto c = corners_;
    for (auto& p : c) p.second = -p.second;
    return RectCurve(std::move(c));
  }

  /// Number of transverse self-intersections (double points).
  int double_points() const {
    int count = 0;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a0 = corners_[i];
      const auto& a1 = corners_[(i + 1) % n];
      if (a0.second != a1.second) continue;  // take horizontals, cross verticals
      auto [xlo, xhi] = std::minmax(a0.first, a1.first);
      for (std::size_t j = 0; j < n; ++j) {
        const auto& b0 = corners_[j];
        const auto& b1 = corners_[(j + 1) % n];
        if (b0.first != b1.first) continue;
        auto [ylo, yhi] = std::minmax(b0.second, b1.second);
        if (b0.first > xlo && b0.first < xhi && a0.second > ylo && a0.second < yhi)
          ++count;
      }
    }
    return count;
  }

 private:
  explicit RectCurve(std::vector<LatticePoint> corners)
      : corners_(std::move(corners)) {}
  std::vector<LatticePoint> corners_;
};

/// (L - R)/4 over the corner turns; the degree of the Gauss map.
inline int whitney_index(const RectCurve& c) {
  int sum = 0;
  for (std::size_t i = 0; i < c.size(); ++i) sum += c.turn_after(i);
  return sum / 4;
}

inline RectCurve reverse(const RectCurve& c) { return c.reversed(); }

// ---------------------------------------------------------------------------
// Numeric side: sampled immersions and the cotangent/1-jet identification.

struct SampledCurve {
  std::vector<std::pair<double, double>> points;  // cyclic fine sampling
};

struct CotangentPoint {
  double q1, q2;  // base point
  double p1, p2;  // unit covector
};

struct J1Point {
  double theta;  // in [0, 2pi)
  double y;
  double z;
};

inline double normalize_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

/// theta = arg(p1 + i p2), z = q1 cos + q2 sin, y = -q1 sin + q2 cos.
inline J1Point st_to_j1(const CotangentPoint& p) {
  if (p.p1 == 0.0 && p.p2 == 0.0)
    throw ValidationError(Err::ZeroCovector, "covector must be nonzero");
  double theta = normalize_angle(std::atan2(p.p2, p.p1));
  double c = std::cos(theta), s = std::sin(theta);
  return {theta, -p.q1 * s + p.q2 * c, p.q1 * c + p.q2 * s};
}

/// Conormal lift of a sampled curve. The tangent angle phi comes from the
/// chord to the next sample; the covector is the 90-degree counterclockwise
/// rotation of the unit tangent.
inline std::vector<J1Point> conormal_lift(const SampledCurve& c) {
  std::vector<J1Point> out;
  const std::size_t n = c.points.size();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [q1, q2] = c.points[i];
    auto [r1, r2] = c.points[(i + 1) % n];
    double dx = r1 - q1, dy = r2 - q2;
    if (dx == 0.0 && dy == 0.0)
      throw ValidationError(Err::DegenerateSample, "repeated sample point");
    double phi = std::atan2(dy, dx);
    double theta = normalize_angle(phi + kTwoPi / 4.0);
    out.push_back({theta,
                   -q1 * std::cos(phi) - q2 * std::sin(phi),
                   -q1 * std::sin(phi) + q2 * std::cos(phi)});
  }
  return out;
}

}  // namespace conormal
