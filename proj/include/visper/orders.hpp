// Stacking-order strategies and an exhaustive optimum for small instances.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "visper/geometry.hpp"
#include "visper/random.hpp"
#include "visper/visibility.hpp"

namespace visper {

/// What a strategy did: its parameters and auxiliary counts.
struct OrderDiagnostics {
  std::string strategy;
  std::map<std::string, double> params;
  std::map<std::string, double> counts;
};

struct OrderResult {
  StackingOrder order;
  OrderDiagnostics diagnostics;
};

enum class Metric { Exact, Limit };

inline double evaluate(const PointSet& ps, const StackingOrder& f, Metric metric) {
  return metric == Metric::Exact ? visible_perimeter(ps, f).total
                                 : limit_visible_perimeter(ps, f).total;
}

/// Indices of a longest subsequence of `values` that is non-decreasing
/// under `less` (patience sorting, O(n log n)).
template <class T, class Less = std::less<T>>
std::vector<std::size_t> longest_monotone_subsequence(std::span<const T> values, Less less = {}) {
  std::vector<std::size_t> tails;  // index of smallest tail for each length
  std::vector<std::size_t> parent(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    // First tail strictly greater than values[i]: equal values extend a chain.
    auto it = std::upper_bound(tails.begin(), tails.end(), i, [&](std::size_t a, std::size_t b) {
      return less(values[a], values[b]);
    });
    if (it != tails.begin()) parent[i] = *(it - 1);
    if (it == tails.end()) {
      tails.push_back(i);
    } else {
      *it = i;
    }
  }
  std::vector<std::size_t> chain;
  if (tails.empty()) return chain;
  for (std::size_t i = tails.back(); i != values.size(); i = parent[i]) chain.push_back(i);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

namespace detail {

inline std::vector<std::size_t> remaining_after(const std::vector<std::size_t>& front, std::size_t n) {
  std::vector<bool> used(n, false);
  for (std::size_t i : front) used[i] = true;
  std::vector<std::size_t> seq = front;
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) seq.push_back(i);
  }
  return seq;
}

}  // namespace detail

/// Longest chain with x non-decreasing and y monotone puts at the front,
/// remaining disks after by index. Each chain disk keeps a quarter of its
/// boundary visible at every scale.
inline OrderResult monotone_order(const PointSet& ps) {
  const std::size_t n = ps.size();
  OrderDiagnostics diag{"monotone", {}, {}};
  if (n == 0) return {StackingOrder{}, diag};

  auto chain_for = [&](bool increasing) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (ps[a].x != ps[b].x) return ps[a].x < ps[b].x;
      return increasing ? ps[a].y < ps[b].y : ps[a].y > ps[b].y;
    });
    std::vector<double> ys(n);
    for (std::size_t k = 0; k < n; ++k) ys[k] = increasing ? ps[idx[k]].y : -ps[idx[k]].y;
    auto sub = longest_monotone_subsequence<double>(ys);
    for (auto& k : sub) k = idx[k];
    return sub;
  };
  auto up = chain_for(true);
  auto down = chain_for(false);
  const bool use_up = up.size() >= down.size();
  auto& chain = use_up ? up : down;

  diag.counts["chain_length"] = double(chain.size());
  diag.counts["erdos_szekeres_floor"] = std::ceil(std::sqrt(double(n)));
  diag.params["y_increasing"] = use_up ? 1.0 : 0.0;
  return {StackingOrder::from_sequence(detail::remaining_after(chain, n)), diag};
}

/// Rows bottom to top, left to right within a row.
inline StackingOrder lexicographic_order(const PointSet& ps) {
  std::vector<std::size_t> idx(ps.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (ps[a].y != ps[b].y) return ps[a].y < ps[b].y;
    return ps[a].x < ps[b].x;
  });
  return StackingOrder::from_sequence(std::move(idx));
}

inline StackingOrder random_order(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.next() % i);
    std::swap(seq[i - 1], seq[j]);
  }
  return StackingOrder::from_sequence(std::move(seq));
}

/// Back-to-front peeling: repeatedly remove the hull vertex with the largest
/// external angle (smallest index on ties) and place it behind the rest.
inline OrderResult greedy_order(const PointSet& ps) {
  const std::size_t n = ps.size();
  OrderDiagnostics diag{"greedy", {}, {}};
  if (n == 0) return {StackingOrder{}, diag};

  std::vector<std::size_t> sorted(n);
  std::iota(sorted.begin(), sorted.end(), 0);
  std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
    return ps[a].x < ps[b].x || (ps[a].x == ps[b].x && ps[a].y < ps[b].y);
  });

  std::vector<bool> alive(n, true);
  std::vector<std::size_t> back_to_front;
  back_to_front.reserve(n);
  std::vector<std::size_t> ring(2 * n + 1);
  double min_tau = INFINITY;
  double max_tau = 0.0;

  for (std::size_t remaining = n; remaining > 0; --remaining) {
    // Monotone chain over the surviving points, already in (x, y) order.
    std::size_t k = 0;
    std::size_t count = 0;
    std::size_t last_alive = n;
    for (std::size_t s : sorted) {
      if (!alive[s]) continue;
      while (k >= 2 && detail::orientation(ps[ring[k - 2]], ps[ring[k - 1]], ps[s]) <= 0) --k;
      ring[k++] = s;
      ++count;
      last_alive = s;
    }
    if (count > 1) {
      const std::size_t lower = k + 1;
      for (std::size_t t = n; t-- > 0;) {
        const std::size_t s = sorted[t];
        if (!alive[s] || s == last_alive) continue;
        while (k >= lower && detail::orientation(ps[ring[k - 2]], ps[ring[k - 1]], ps[s]) <= 0) --k;
        ring[k++] = s;
      }
      --k;  // closing vertex repeats the first
    }
    const HullState hull = [&] {
      std::vector<Point> verts;
      verts.reserve(k);
      for (std::size_t v = 0; v < k; ++v) verts.push_back(ps[ring[v]]);
      return HullState::from_ring(std::move(verts));
    }();

    std::size_t best = n;
    double best_tau = -1.0;
    for (std::size_t v = 0; v < k; ++v) {
      const double tau = hull.external_angle(v);
      const std::size_t idx = ring[v];
      if (tau > best_tau + 1e-12 || (std::abs(tau - best_tau) <= 1e-12 && idx < best)) {
        best = idx;
        best_tau = std::max(best_tau, tau);
      }
    }
    if (remaining > 1) {
      min_tau = std::min(min_tau, best_tau);
      max_tau = std::max(max_tau, best_tau);
    }
    alive[best] = false;
    back_to_front.push_back(best);
  }
  std::reverse(back_to_front.begin(), back_to_front.end());
  diag.counts["min_step_tau"] = n > 1 ? min_tau : kTwoPi;
  diag.counts["max_step_tau"] = n > 1 ? max_tau : kTwoPi;
  return {StackingOrder::from_sequence(std::move(back_to_front)), diag};
}

struct SectorParams {
  /// Density constant: spread <= C sqrt(n). Raised to spread/sqrt(n) if smaller.
  double C = 2.0;
  /// Sector angle is Cstar * n^{-1/3}.
  double Cstar = 1.0;
  std::uint64_t seed = 0;
  std::size_t retries = 8;
};

/// Randomized annular-sector construction. Viewed from a random point p on a
/// circle of radius 2 C sqrt(n) around the set (normalized to minimum
/// distance 1), the plane is cut into annuli of width n^{-1/6} and sectors of
/// angle Cstar n^{-1/3}, four-colored. One point from each occupied sector of
/// the most occupied color goes to the front, by distance from p and then
/// clockwise; the rest follow by index. Keeps the best of `retries` draws.
inline OrderResult sector_order(const PointSet& ps, const SectorParams& params = {}) {
  const std::size_t n = ps.size();
  OrderDiagnostics diag{"sector", {}, {}};
  diag.params["C"] = params.C;
  diag.params["Cstar"] = params.Cstar;
  diag.params["retries"] = double(params.retries);
  if (n <= 1) {
    diag.counts["selected"] = double(n);
    diag.counts["occupied"] = double(n);
    return {StackingOrder::identity(n), diag};
  }

  const double unit = 1.0 / ps.min_dist();
  const double nd = double(n);
  double lo_x = INFINITY, lo_y = INFINITY, hi_x = -INFINITY, hi_y = -INFINITY;
  for (const Point& q : ps) {
    lo_x = std::min(lo_x, q.x * unit);
    hi_x = std::max(hi_x, q.x * unit);
    lo_y = std::min(lo_y, q.y * unit);
    hi_y = std::max(hi_y, q.y * unit);
  }
  const Point center{(lo_x + hi_x) / 2.0, (lo_y + hi_y) / 2.0};
  double reach = 0.0;
  for (const Point& q : ps) reach = std::max(reach, distance(unit * q, center));
  const double disk_radius = std::max(params.C * std::sqrt(nd), reach);
  const double width = std::pow(nd, -1.0 / 6.0);
  const double alpha = params.Cstar * std::pow(nd, -1.0 / 3.0);

  struct Draw {
    std::vector<std::size_t> front;
    std::size_t occupied = 0;
    int color = 0;
    double theta = 0.0;
  };
  auto draw = [&](double theta) {
    const Point p = center + 2.0 * disk_radius * Point{std::cos(theta), std::sin(theta)};
    const Point to_center = center - p;
    const double base = std::atan2(to_center.y, to_center.x);

    struct Sector {
      std::size_t rep;
      double offset;  // |angle - sector midline|
    };
    std::map<std::pair<long long, long long>, Sector> sectors;
    for (std::size_t i = 0; i < n; ++i) {
      const Point v = unit * ps[i] - p;
      const auto annulus = static_cast<long long>(std::floor(norm(v) / width));
      const double rel = normalize_angle(std::atan2(v.y, v.x) - base + kPi);
      const auto slot = static_cast<long long>(std::floor(rel / alpha));
      const double offset = std::abs(rel - (double(slot) + 0.5) * alpha);
      auto [it, inserted] = sectors.try_emplace({annulus, slot}, Sector{i, offset});
      if (!inserted && offset < it->second.offset) it->second = {i, offset};
    }
    auto color_of = [](long long annulus, long long slot) {
      return (annulus % 2 != 0 ? 1 : 3) + int(slot & 1);
    };
    std::size_t per_color[5] = {0, 0, 0, 0, 0};
    for (const auto& [key, sec] : sectors) ++per_color[color_of(key.first, key.second)];
    int color = 1;
    for (int c = 2; c <= 4; ++c) {
      if (per_color[c] > per_color[color]) color = c;
    }

    // Increasing annulus, then clockwise (decreasing angle) within it.
    std::vector<std::pair<std::pair<long long, long long>, std::size_t>> kept;
    for (const auto& [key, sec] : sectors) {
      if (color_of(key.first, key.second) == color) kept.push_back({{key.first, -key.second}, sec.rep});
    }
    std::sort(kept.begin(), kept.end());
    Draw d;
    d.occupied = sectors.size();
    d.color = color;
    d.theta = theta;
    for (const auto& [key, rep] : kept) d.front.push_back(rep);
    return d;
  };

  Rng rng(params.seed);
  Draw best;
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(1, params.retries); ++attempt) {
    Draw d = draw(kTwoPi * rng.uniform());
    if (attempt == 0 || d.front.size() > best.front.size()) best = std::move(d);
  }

  diag.params["annulus_width"] = width;
  diag.params["sector_angle"] = alpha;
  diag.params["theta"] = best.theta;
  diag.counts["selected"] = double(best.front.size());
  diag.counts["occupied"] = double(best.occupied);
  diag.counts["color"] = double(best.color);
  return {StackingOrder::from_sequence(detail::remaining_after(best.front, n)), diag};
}

/// Exhaustive search over all n! orders (n <= 8). Ties keep the
/// lexicographically smallest rank vector.
inline std::pair<StackingOrder, double> optimal_order_bruteforce(const PointSet& ps, Metric metric) {
  const std::size_t n = ps.size();
  if (n > 8) throw std::invalid_argument("optimal_order_bruteforce: n must be <= 8");
  if (n == 0) return {StackingOrder{}, 0.0};

  // Pairwise coverage is order independent.
  std::vector<std::vector<ArcIntervalSet>> cover(n, std::vector<ArcIntervalSet>(n));
  if (metric == Metric::Exact) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) cover[i][j] = coverage_interval(ps[i], ps[j]);
      }
    }
  }
  auto exact_value = [&](const std::vector<std::size_t>& ranks) {
    double total = 0.0;
    std::vector<ArcIntervalSet::Interval> covered;
    for (std::size_t i = 0; i < n; ++i) {
      covered.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (ranks[j] < ranks[i]) {
          covered.insert(covered.end(), cover[i][j].intervals().begin(), cover[i][j].intervals().end());
        }
      }
      total += kTwoPi - ArcIntervalSet::from_intervals(covered).measure();
    }
    return total;
  };

  std::vector<std::size_t> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 1);
  std::vector<std::size_t> best_ranks = ranks;
  double best = -INFINITY;
  do {
    const double value = metric == Metric::Exact
                             ? exact_value(ranks)
                             : limit_visible_perimeter(ps, StackingOrder::from_ranks(ranks)).total;
    if (value > best + 1e-12) {
      best = value;
      best_ranks = ranks;
    }
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return {StackingOrder::from_ranks(best_ranks), best};
}

enum class SubStrategy { Auto, BruteForce, Greedy };

struct CellParams {
  /// Largest number of disks sharing a point; recorded, not enforced.
  double overlap_bound = 0.0;
  SubStrategy sub = SubStrategy::Auto;
  std::uint64_t seed = 0;
  /// Offsets tried; stops early once every disk is interior to a cell.
  std::size_t max_tries = 64;
};

/// Random grid of 4x4 cells. Disks lying wholly inside one cell are ordered
/// per cell (exhaustively for at most 8 disks under Auto, greedily
/// otherwise) and placed in front, cell after cell; all other disks go
/// behind by index. Disks in distinct cells cannot overlap.
inline OrderResult cell_partition_order(const PointSet& ps, const CellParams& params = {}) {
  constexpr double kCell = 4.0;
  const std::size_t n = ps.size();
  OrderDiagnostics diag{"cell_partition", {}, {}};
  diag.params["overlap_bound"] = params.overlap_bound;
  diag.params["max_tries"] = double(params.max_tries);

  using CellKey = std::pair<long long, long long>;
  auto assign = [&](Point offset) {
    std::map<CellKey, std::vector<std::size_t>> cells;
    std::size_t interior = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = ps[i].x - offset.x;
      const double v = ps[i].y - offset.y;
      const double cx = std::floor(u / kCell);
      const double cy = std::floor(v / kCell);
      const double fx = u - kCell * cx;
      const double fy = v - kCell * cy;
      if (fx >= 1.0 && fx <= kCell - 1.0 && fy >= 1.0 && fy <= kCell - 1.0) {
        cells[{static_cast<long long>(cx), static_cast<long long>(cy)}].push_back(i);
        ++interior;
      }
    }
    return std::pair{std::move(cells), interior};
  };

  Rng rng(params.seed);
  Point best_offset{};
  std::size_t best_interior = 0;
  std::map<CellKey, std::vector<std::size_t>> best_cells;
  std::size_t tries = 0;
  while (tries < std::max<std::size_t>(1, params.max_tries)) {
    const Point offset{kCell * rng.uniform(), kCell * rng.uniform()};
    auto [cells, interior] = assign(offset);
    ++tries;
    if (tries == 1 || interior > best_interior) {
      best_offset = offset;
      best_interior = interior;
      best_cells = std::move(cells);
    }
    if (best_interior == n) break;
  }

  std::vector<std::size_t> front;
  for (const auto& [key, members] : best_cells) {
    std::vector<Point> local;
    for (std::size_t i : members) local.push_back(ps[i]);
    const PointSet cell(std::move(local));
    const bool brute = params.sub == SubStrategy::BruteForce ||
                       (params.sub == SubStrategy::Auto && members.size() <= 8);
    const StackingOrder sub = brute ? optimal_order_bruteforce(cell, Metric::Exact).first
                                    : greedy_order(cell).order;
    for (std::size_t local_idx : sub.sequence()) front.push_back(members[local_idx]);
  }

  diag.params["offset_x"] = best_offset.x;
  diag.params["offset_y"] = best_offset.y;
  diag.counts["interior"] = double(best_interior);
  diag.counts["cells"] = double(best_cells.size());
  diag.counts["tries"] = double(tries);
  return {StackingOrder::from_sequence(detail::remaining_after(front, n)), diag};
}

}  // namespace visper
