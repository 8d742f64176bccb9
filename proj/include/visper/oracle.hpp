// Independent checks of the visibility computations: Monte-Carlo sampling of
// disk boundaries, and an explicit contraction schedule for the limit.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "visper/generators.hpp"
#include "visper/geometry.hpp"
#include "visper/random.hpp"
#include "visper/visibility.hpp"

namespace visper {

struct SampledEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Samples m uniform boundary angles per disk and counts those not strictly
/// inside any disk in front of it. Per-disk streams are derived from seed so
/// the result does not depend on evaluation order.
inline SampledEstimate sampled_visible_perimeter(const PointSet& ps, const StackingOrder& f,
                                                 std::size_t m, std::uint64_t seed) {
  if (f.size() != ps.size()) throw std::invalid_argument("sampled_visible_perimeter: order size mismatch");
  if (m == 0) throw std::invalid_argument("sampled_visible_perimeter: m must be positive");
  SampledEstimate out;
  double variance = 0.0;
  std::vector<Point> blockers;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    blockers.clear();
    for (std::size_t r = 1; r < f.rank(i); ++r) {
      const Point c = ps[f.at_rank(r)];
      if (distance(c, ps[i]) < 2.0) blockers.push_back(c);
    }
    std::size_t visible = m;
    if (!blockers.empty()) {
      Rng rng(derive_seed(seed, i));
      visible = 0;
      for (std::size_t s = 0; s < m; ++s) {
        const double a = kTwoPi * rng.uniform();
        const Point q{ps[i].x + std::cos(a), ps[i].y + std::sin(a)};
        bool covered = false;
        for (const Point& c : blockers) {
          const Point d = q - c;
          if (dot(d, d) < 1.0) {
            covered = true;
            break;
          }
        }
        if (!covered) ++visible;
      }
    }
    const double frac = double(visible) / double(m);
    out.estimate += kTwoPi * frac;
    variance += kTwoPi * kTwoPi * frac * (1.0 - frac) / double(m);
  }
  out.std_error = std::sqrt(variance);
  return out;
}

/// Exact visible perimeter of the arrangement scaled by each factor in the
/// strictly decreasing schedule.
inline std::vector<std::pair<double, double>> limit_probe(const PointSet& ps, const StackingOrder& f,
                                                          const std::vector<double>& schedule) {
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (!(schedule[k] > 0.0) || (k > 0 && !(schedule[k] < schedule[k - 1]))) {
      throw std::invalid_argument("limit_probe: schedule must be positive and strictly decreasing");
    }
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(schedule.size());
  for (double eps : schedule) out.emplace_back(eps, visible_perimeter(scale(ps, eps), f).total);
  return out;
}

}  // namespace visper
