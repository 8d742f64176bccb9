// Planar primitives for stacked unit-disk arrangements: points, point sets,
// stacking orders, angular interval sets and an incrementally maintained
// convex hull that reports external angles.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace visper {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Relative tolerance for orientation tests, scaled by local coordinate magnitude.
inline constexpr double kOrientTol = 1e-9;
/// Absolute tolerance (radians) used when merging interval endpoints.
inline constexpr double kAngleTol = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Signed angle of the turn from direction u to direction v, in (-pi, pi].
inline double turn_angle(Point u, Point v) { return std::atan2(cross(u, v), dot(u, v)); }

/// Normalizes an angle to [0, 2pi).
inline double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// Labeled planar points with cached pairwise-distance extremes.
///
/// Construction validates that coordinates are finite and pairwise distinct;
/// min_dist/diameter are computed exactly in O(n^2).
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
    for (const Point& p : points_) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw std::invalid_argument("PointSet: non-finite coordinate");
      }
    }
    if (points_.size() < 2) return;
    double lo = INFINITY;
    double hi = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      for (std::size_t j = i + 1; j < points_.size(); ++j) {
        const Point d = points_[i] - points_[j];
        const double d2 = dot(d, d);
        lo = std::min(lo, d2);
        hi = std::max(hi, d2);
      }
    }
    if (lo <= 0.0) throw std::invalid_argument("PointSet: duplicate points");
    min_dist_ = std::sqrt(lo);
    diameter_ = std::sqrt(hi);
  }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Minimum pairwise distance; 0 when fewer than two points.
  double min_dist() const { return min_dist_; }
  double diameter() const { return diameter_; }

 private:
  std::vector<Point> points_;
  double min_dist_ = 0.0;
  double diameter_ = 0.0;
};

/// Ratio of maximum to minimum pairwise distance.
inline double spread(const PointSet& ps) {
  if (ps.size() < 2) throw std::invalid_argument("spread: need at least two points");
  return ps.diameter() / ps.min_dist();
}

/// True when spread(ps) <= C * sqrt(n).
inline bool is_dense(const PointSet& ps, double C) {
  return spread(ps) <= C * std::sqrt(static_cast<double>(ps.size())) * (1.0 + 1e-12);
}

/// A bijection from disk indices to depth ranks. Rank 1 (stored 0-based as
/// position 0 of the sequence) is the disk nearest the viewer.
class StackingOrder {
 public:
  StackingOrder() = default;

  /// Builds an order from disk indices listed front to back.
  static StackingOrder from_sequence(std::vector<std::size_t> sequence) {
    StackingOrder f;
    f.rank_.assign(sequence.size(), 0);
    std::vector<bool> seen(sequence.size(), false);
    for (std::size_t r = 0; r < sequence.size(); ++r) {
      const std::size_t i = sequence[r];
      if (i >= sequence.size() || seen[i]) {
        throw std::invalid_argument("StackingOrder: sequence is not a permutation");
      }
      seen[i] = true;
      f.rank_[i] = r + 1;
    }
    f.sequence_ = std::move(sequence);
    return f;
  }

  /// Builds an order from 1-based ranks indexed by disk.
  static StackingOrder from_ranks(const std::vector<std::size_t>& ranks) {
    std::vector<std::size_t> seq(ranks.size(), ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      const std::size_t r = ranks[i];
      if (r < 1 || r > ranks.size() || seq[r - 1] != ranks.size()) {
        throw std::invalid_argument("StackingOrder: ranks are not a permutation of 1..n");
      }
      seq[r - 1] = i;
    }
    return from_sequence(std::move(seq));
  }

  static StackingOrder identity(std::size_t n) {
    std::vector<std::size_t> seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = i;
    return from_sequence(std::move(seq));
  }

  std::size_t size() const { return sequence_.size(); }
  /// 1-based rank of disk i.
  std::size_t rank(std::size_t i) const { return rank_.at(i); }
  /// Disk index holding 1-based rank r.
  std::size_t at_rank(std::size_t r) const { return sequence_.at(r - 1); }
  /// Disk indices front to back.
  std::span<const std::size_t> sequence() const { return sequence_; }
  std::span<const std::size_t> ranks() const { return rank_; }

  friend bool operator==(const StackingOrder&, const StackingOrder&) = default;

 private:
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> rank_;
};

/// A union of disjoint half-open angular intervals [a, b) within [0, 2pi].
/// Intervals crossing angle 0 are split at 2pi; the canonical form is sorted
/// with touching intervals merged.
class ArcIntervalSet {
 public:
  using Interval = std::pair<double, double>;

  ArcIntervalSet() = default;

  static ArcIntervalSet full() {
    ArcIntervalSet s;
    s.intervals_.emplace_back(0.0, kTwoPi);
    return s;
  }

  /// Arc of the given half width centered at angle `center`, wrapping as needed.
  static ArcIntervalSet arc(double center, double half_width) {
    ArcIntervalSet s;
    if (half_width <= 0.0) return s;
    if (half_width >= kPi) return full();
    const double a = normalize_angle(center - half_width);
    const double b = a + 2.0 * half_width;
    if (b <= kTwoPi) {
      s.intervals_.emplace_back(a, b);
    } else {
      s.intervals_.emplace_back(0.0, b - kTwoPi);
      s.intervals_.emplace_back(a, kTwoPi);
    }
    s.canonicalize();
    return s;
  }

  /// Builds a canonical set from arbitrary (possibly overlapping) intervals in [0, 2pi].
  static ArcIntervalSet from_intervals(std::vector<Interval> intervals) {
    ArcIntervalSet s;
    s.intervals_ = std::move(intervals);
    for (auto& [a, b] : s.intervals_) {
      a = std::clamp(a, 0.0, kTwoPi);
      b = std::clamp(b, 0.0, kTwoPi);
    }
    s.canonicalize();
    return s;
  }

  std::span<const Interval> intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

  double measure() const {
    double m = 0.0;
    for (const auto& [a, b] : intervals_) m += b - a;
    return m;
  }

  bool contains(double angle) const {
    const double t = normalize_angle(angle);
    for (const auto& [a, b] : intervals_) {
      if (t >= a && t < b) return true;
    }
    return false;
  }

  ArcIntervalSet complement() const {
    std::vector<Interval> out;
    double cursor = 0.0;
    for (const auto& [a, b] : intervals_) {
      if (a > cursor) out.emplace_back(cursor, a);
      cursor = std::max(cursor, b);
    }
    if (cursor < kTwoPi) out.emplace_back(cursor, kTwoPi);
    return from_intervals(std::move(out));
  }

  friend ArcIntervalSet interval_union(const ArcIntervalSet& a, const ArcIntervalSet& b) {
    std::vector<Interval> all(a.intervals_);
    all.insert(all.end(), b.intervals_.begin(), b.intervals_.end());
    return from_intervals(std::move(all));
  }

  friend ArcIntervalSet interval_intersect(const ArcIntervalSet& a, const ArcIntervalSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.intervals_.size() && j < b.intervals_.size()) {
      const double lo = std::max(a.intervals_[i].first, b.intervals_[j].first);
      const double hi = std::min(a.intervals_[i].second, b.intervals_[j].second);
      if (hi > lo) out.emplace_back(lo, hi);
      if (a.intervals_[i].second < b.intervals_[j].second) {
        ++i;
      } else {
        ++j;
      }
    }
    return from_intervals(std::move(out));
  }

  friend ArcIntervalSet interval_subtract(const ArcIntervalSet& a, const ArcIntervalSet& b) {
    return interval_intersect(a, b.complement());
  }

  friend bool operator==(const ArcIntervalSet&, const ArcIntervalSet&) = default;

 private:
  void canonicalize() {
    std::erase_if(intervals_, [](const Interval& iv) { return !(iv.second > iv.first); });
    std::sort(intervals_.begin(), intervals_.end());
    std::vector<Interval> merged;
    merged.reserve(intervals_.size());
    for (const Interval& iv : intervals_) {
      if (!merged.empty() && iv.first <= merged.back().second + kAngleTol) {
        merged.back().second = std::max(merged.back().second, iv.second);
      } else {
        merged.push_back(iv);
      }
    }
    intervals_ = std::move(merged);
  }

  std::vector<Interval> intervals_;
};

inline double measure(const ArcIntervalSet& s) { return s.measure(); }

/// Part of unit circle i's boundary lying inside the closed unit disk j.
inline ArcIntervalSet coverage_interval(Point center_i, Point center_j) {
  const Point v = center_j - center_i;
  const double d = norm(v);
  if (d >= 2.0) return {};
  if (d <= 1e-15) return ArcIntervalSet::full();
  return ArcIntervalSet::arc(std::atan2(v.y, v.x), std::acos(d / 2.0));
}

enum class HullKind { Empty, Point, Segment, Polygon };

enum class Location { Contained, Exterior };

namespace detail {

inline double magnitude(Point p) { return std::max(std::abs(p.x), std::abs(p.y)); }

/// Orientation of c relative to the directed line a->b: +1 left, -1 right,
/// 0 when c lies within the relative tolerance of the line.
inline int orientation(Point a, Point b, Point c) {
  const Point ab = b - a;
  const double len = norm(ab);
  const double scale = std::max({magnitude(a), magnitude(b), magnitude(c), len});
  const double c2 = cross(ab, c - a);
  if (len == 0.0) return 0;
  if (std::abs(c2) <= kOrientTol * scale * len) return 0;
  return c2 > 0.0 ? 1 : -1;
}

inline bool same_point(Point a, Point b) {
  const double scale = std::max({magnitude(a), magnitude(b), 1e-300});
  return distance(a, b) <= kOrientTol * scale;
}

}  // namespace detail

/// Convex hull of a prefix of points, stored as a counterclockwise ring of
/// strictly convex vertices. One vertex is a point hull, two a segment.
class HullState {
 public:
  HullState() = default;

  HullKind kind() const {
    switch (vertices_.size()) {
      case 0: return HullKind::Empty;
      case 1: return HullKind::Point;
      case 2: return HullKind::Segment;
      default: return HullKind::Polygon;
    }
  }

  std::span<const Point> vertices() const { return vertices_; }

  /// Perimeter; a segment counts twice its length and a point counts zero.
  double perimeter() const {
    const std::size_t m = vertices_.size();
    if (m < 2) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) total += distance(vertices_[i], vertices_[(i + 1) % m]);
    return total;
  }

  /// True if p lies in the hull or on its boundary, within tolerance.
  bool contains(Point p) const {
    switch (kind()) {
      case HullKind::Empty: return false;
      case HullKind::Point: return detail::same_point(vertices_[0], p);
      case HullKind::Segment: {
        const Point a = vertices_[0];
        const Point b = vertices_[1];
        if (detail::orientation(a, b, p) != 0) return false;
        const double t = dot(p - a, b - a) / dot(b - a, b - a);
        const double slack = kOrientTol * std::max({detail::magnitude(a), detail::magnitude(b),
                                                    detail::magnitude(p), norm(b - a)}) /
                             norm(b - a);
        return t >= -slack && t <= 1.0 + slack;
      }
      case HullKind::Polygon: {
        const std::size_t m = vertices_.size();
        for (std::size_t i = 0; i < m; ++i) {
          if (detail::orientation(vertices_[i], vertices_[(i + 1) % m], p) < 0) return false;
        }
        return true;
      }
    }
    return false;
  }

  struct Insertion {
    Location location;
    /// External angle of the updated hull at the inserted point; 0 when contained,
    /// 2pi for the first point, pi for a segment endpoint.
    double tau;
  };

  /// Inserts p, updating the hull in place, and reports its external angle.
  Insertion insert(Point p) {
    switch (kind()) {
      case HullKind::Empty:
        vertices_.push_back(p);
        return {Location::Exterior, kTwoPi};
      case HullKind::Point:
        if (detail::same_point(vertices_[0], p)) return {Location::Contained, 0.0};
        vertices_.push_back(p);
        return {Location::Exterior, kPi};
      case HullKind::Segment: return insert_into_segment(p);
      case HullKind::Polygon: return insert_into_polygon(p);
    }
    return {Location::Contained, 0.0};
  }

  /// External angle at ring vertex k (pi - interior angle); pi for segment
  /// endpoints and 2pi for a point hull.
  double external_angle(std::size_t k) const {
    const std::size_t m = vertices_.size();
    if (m == 1) return kTwoPi;
    if (m == 2) return kPi;
    const Point prev = vertices_[(k + m - 1) % m];
    const Point cur = vertices_[k];
    const Point next = vertices_[(k + 1) % m];
    return turn_angle(cur - prev, next - cur);
  }

  /// Builds a hull from an already-convex CCW ring without validation.
  static HullState from_ring(std::vector<Point> ring) {
    HullState h;
    h.vertices_ = std::move(ring);
    return h;
  }

 private:
  Insertion insert_into_segment(Point p) {
    const Point a = vertices_[0];
    const Point b = vertices_[1];
    const int o = detail::orientation(a, b, p);
    if (o == 0) {
      if (contains(p)) return {Location::Contained, 0.0};
      // Collinear extension: p replaces the endpoint it lies beyond.
      if (dot(p - a, b - a) < 0.0) {
        vertices_[0] = p;
      } else {
        vertices_[1] = p;
      }
      return {Location::Exterior, kPi};
    }
    if (o > 0) {
      vertices_ = {a, b, p};
    } else {
      vertices_ = {b, a, p};
    }
    return {Location::Exterior, external_angle(2)};
  }

  Insertion insert_into_polygon(Point p) {
    const std::size_t m = vertices_.size();
    std::vector<bool> visible(m);
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) {
      visible[i] = detail::orientation(vertices_[i], vertices_[(i + 1) % m], p) < 0;
      any = any || visible[i];
    }
    if (!any) return {Location::Contained, 0.0};

    // Visible edges form one cyclic run; find its first edge.
    std::size_t first = 0;
    while (!(visible[first] && !visible[(first + m - 1) % m])) ++first;
    std::size_t last = first;
    while (visible[(last + 1) % m]) last = (last + 1) % m;

    // Keep vertices from the end of the visible run around to its start.
    std::vector<Point> ring;
    ring.reserve(m + 1);
    const std::size_t start = (last + 1) % m;
    for (std::size_t k = start;; k = (k + 1) % m) {
      ring.push_back(vertices_[k]);
      if (k == first) break;
    }
    ring.push_back(p);

    // Drop neighbours of p that became collinear with it.
    while (ring.size() > 3 &&
           detail::orientation(ring[ring.size() - 3], ring[ring.size() - 2], p) == 0) {
      ring.erase(ring.end() - 2);
    }
    while (ring.size() > 3 && detail::orientation(p, ring[0], ring[1]) == 0) {
      ring.erase(ring.begin());
    }
    vertices_ = std::move(ring);
    return {Location::Exterior, external_angle(vertices_.size() - 1)};
  }

  std::vector<Point> vertices_;
};

/// Convex hull of points as a counterclockwise ring (Andrew's monotone chain).
/// Collinear inputs yield a segment, coincident inputs a single point.
inline HullState convex_hull(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(), detail::same_point), pts.end());
  if (pts.size() == 1) return HullState::from_ring({pts[0]});

  std::vector<Point> ring(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && detail::orientation(ring[k - 2], ring[k - 1], p) <= 0) --k;
    ring[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = pts[i];
    while (k >= lower && detail::orientation(ring[k - 2], ring[k - 1], p) <= 0) --k;
    ring[k++] = p;
  }
  ring.resize(k - 1);
  if (ring.size() == 1) ring.push_back(pts.back());
  return HullState::from_ring(std::move(ring));
}

inline HullState convex_hull(const PointSet& ps) { return convex_hull(ps.points()); }

}  // namespace visper
