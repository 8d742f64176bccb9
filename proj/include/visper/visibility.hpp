// Exact visible perimeter of stacked unit disks and its limit under
// contraction of the centers, expressed as a sum of hull external angles.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "visper/geometry.hpp"

namespace visper {

struct VisibilityReport {
  /// Visible arc measure (radians) of each disk, indexed by disk.
  std::vector<double> per_disk;
  /// Sum of per_disk; a length since the disks have radius 1.
  double total = 0.0;
};

/// Angles and hull perimeters recorded while inserting centers front to back.
struct AngleTrace {
  /// tau for rank 1..n (stored 0-based): 2pi first, then values in [0, pi].
  std::vector<double> taus;
  /// Perimeter of the hull of the first i+1 centers.
  std::vector<double> per;

  double sum() const {
    double s = 0.0;
    for (double t : taus) s += t;
    return s;
  }
};

/// Boundary of disk i not covered by any disk in front of it.
inline ArcIntervalSet visible_arcs(const PointSet& ps, const StackingOrder& f, std::size_t i) {
  if (i >= ps.size()) throw std::out_of_range("visible_arcs: disk index out of range");
  if (f.size() != ps.size()) throw std::invalid_argument("visible_arcs: order size mismatch");
  const std::size_t ri = f.rank(i);
  std::vector<ArcIntervalSet::Interval> covered;
  for (std::size_t r = 1; r < ri; ++r) {
    const ArcIntervalSet c = coverage_interval(ps[i], ps[f.at_rank(r)]);
    covered.insert(covered.end(), c.intervals().begin(), c.intervals().end());
  }
  return ArcIntervalSet::from_intervals(std::move(covered)).complement();
}

inline VisibilityReport visible_perimeter(const PointSet& ps, const StackingOrder& f) {
  if (f.size() != ps.size()) throw std::invalid_argument("visible_perimeter: order size mismatch");
  VisibilityReport report;
  report.per_disk.resize(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    report.per_disk[i] = visible_arcs(ps, f, i).measure();
  }
  for (double m : report.per_disk) report.total += m;
  return report;
}

struct LimitResult {
  double total = 0.0;
  AngleTrace trace;
};

/// Limit of the visible perimeter as the centers contract to a point: the
/// sum over ranks of the external angle each center adds to the hull of
/// the centers in front of it.
inline LimitResult limit_visible_perimeter(const PointSet& ps, const StackingOrder& f) {
  if (f.size() != ps.size()) throw std::invalid_argument("limit_visible_perimeter: order size mismatch");
  LimitResult result;
  result.trace.taus.reserve(ps.size());
  result.trace.per.reserve(ps.size());
  HullState hull;
  for (std::size_t disk : f.sequence()) {
    const auto step = hull.insert(ps[disk]);
    result.trace.taus.push_back(step.tau);
    result.trace.per.push_back(hull.perimeter());
  }
  result.total = result.trace.sum();
  return result;
}

struct PerimeterGap {
  /// 1-based rank of the inserted center.
  std::size_t rank;
  double gap;
  double bound;
};

/// Hull perimeter growth per step against min_dist * tau^2 / 5, for ranks >= 2.
/// The inequality gap >= bound holds for any order when min_dist is the
/// minimum pairwise distance of the centers.
inline std::vector<PerimeterGap> perimeter_gap_trace(const AngleTrace& trace, double min_dist) {
  std::vector<PerimeterGap> out;
  for (std::size_t i = 1; i < trace.taus.size(); ++i) {
    const double tau = trace.taus[i];
    out.push_back({i + 1, trace.per[i] - trace.per[i - 1], min_dist * tau * tau / 5.0});
  }
  return out;
}

}  // namespace visper
