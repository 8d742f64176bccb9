// Point-set families: grids, concentric half-rings, tight logarithmic
// spirals, random dense sets, plus scaling and translated tiling.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "visper/geometry.hpp"
#include "visper/random.hpp"

namespace visper {

/// Family name plus the parameters needed to reproduce an instance.
struct GeneratorSpec {
  std::string family;
  std::map<std::string, double> params;

  double param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("generator '" + family + "' missing parameter " + key);
    return it->second;
  }
  double param_or(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }

  /// e.g. "grid(k=10)"; parameters in key order.
  std::string to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << family << '(';
    bool first = true;
    for (const auto& [k, v] : params) {
      if (!first) os << ';';
      os << k << '=' << v;
      first = false;
    }
    os << ')';
    return os.str();
  }
};

/// k x k integer grid {0..k-1}^2, row-major by y then x.
inline PointSet grid(std::size_t k) {
  if (k < 1) throw std::invalid_argument("grid: k must be >= 1");
  std::vector<Point> pts;
  pts.reserve(k * k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) pts.push_back({double(i), double(j)});
  }
  return PointSet(std::move(pts));
}

struct RingsInstance {
  PointSet points;
  /// Increasing radius, then increasing angle.
  StackingOrder canonical;
};

/// k^2 points at polar coordinates (r, jpi/(k-1)) for r in {k..2k-1},
/// j in {0..k-1}. Minimum distance 1, diameter < 4k.
inline RingsInstance concentric_rings(std::size_t k) {
  if (k < 3) throw std::invalid_argument("concentric_rings: k must be >= 3");
  std::vector<Point> pts;
  pts.reserve(k * k);
  for (std::size_t r = k; r <= 2 * k - 1; ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      const double theta = double(j) * kPi / double(k - 1);
      pts.push_back({double(r) * std::cos(theta), double(r) * std::sin(theta)});
    }
  }
  const std::size_t n = pts.size();
  return {PointSet(std::move(pts)), StackingOrder::identity(n)};
}

struct SpiralInstance {
  PointSet points;
  /// Index order, outward along the spiral.
  StackingOrder spiral;
  /// Ray by ray in cyclic order, outward along each ray.
  StackingOrder ray;
  double b = 0.0;
};

inline double default_spiral_b(std::size_t n) { return 1e-3 / std::sqrt(double(n)); }

inline std::size_t exact_sqrt(std::size_t n) {
  auto s = static_cast<std::size_t>(std::llround(std::sqrt(double(n))));
  if (s * s != n) throw std::invalid_argument("n = " + std::to_string(n) + " is not a perfect square");
  return s;
}

/// Points p_i, i = 1..n, at polar coordinates (e^{b i}, 2 pi i / sqrt(n)):
/// sqrt(n) rays crossed by sqrt(n) rounds of a logarithmic spiral.
inline SpiralInstance log_spiral(std::size_t n, double b) {
  const std::size_t s = exact_sqrt(n);
  if (!(b > 0.0)) throw std::invalid_argument("log_spiral: b must be positive");
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double r = std::exp(b * double(i));
    const double theta = kTwoPi * double(i) / double(s);
    pts.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  std::vector<std::size_t> ray_seq;
  ray_seq.reserve(n);
  for (std::size_t j = 1; j <= s; ++j) {
    for (std::size_t i = j; i <= n; i += s) ray_seq.push_back(i - 1);
  }
  return {PointSet(std::move(pts)), StackingOrder::identity(n),
          StackingOrder::from_sequence(std::move(ray_seq)), b};
}

inline SpiralInstance log_spiral(std::size_t n) { return log_spiral(n, default_spiral_b(n)); }

/// n points with pairwise distance >= 1 inside a disk of diameter C sqrt(n),
/// placed by dart throwing. Spread is therefore at most C sqrt(n).
inline PointSet random_dense(std::size_t n, double C, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_dense: n must be >= 1");
  if (!(C >= 2.0)) throw std::invalid_argument("random_dense: C must be >= 2");
  const double radius = C * std::sqrt(double(n)) / 2.0;
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);

  // Spatial hash with unit cells: a conflicting point lies in the 3x3 block.
  auto key = [](long long cx, long long cy) { return (cx << 32) ^ (cy & 0xffffffffLL); };
  std::unordered_map<long long, std::vector<std::size_t>> cells;
  const std::size_t max_attempts = 2000 * n + 10000;
  for (std::size_t attempt = 0; pts.size() < n; ++attempt) {
    if (attempt >= max_attempts) {
      throw std::runtime_error("random_dense: failed to place " + std::to_string(n) + " points");
    }
    const double rr = radius * std::sqrt(rng.uniform());
    const double th = kTwoPi * rng.uniform();
    const Point p{rr * std::cos(th), rr * std::sin(th)};
    const auto cx = static_cast<long long>(std::floor(p.x));
    const auto cy = static_cast<long long>(std::floor(p.y));
    bool ok = true;
    for (long long dx = -1; dx <= 1 && ok; ++dx) {
      for (long long dy = -1; dy <= 1 && ok; ++dy) {
        auto it = cells.find(key(cx + dx, cy + dy));
        if (it == cells.end()) continue;
        for (std::size_t q : it->second) {
          const Point d = pts[q] - p;
          if (dot(d, d) < 1.0) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;
    cells[key(cx, cy)].push_back(pts.size());
    pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

inline PointSet scale(const PointSet& ps, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("scale: factor must be positive");
  std::vector<Point> pts;
  pts.reserve(ps.size());
  for (const Point& p : ps) pts.push_back(eps * p);
  return PointSet(std::move(pts));
}

/// r translates of ps along the x axis, bounding boxes separated by gap.
/// Copy c occupies indices [c*n, (c+1)*n).
inline PointSet tile_copies(const PointSet& ps, std::size_t r, double gap) {
  if (r < 1) throw std::invalid_argument("tile_copies: r must be >= 1");
  if (ps.empty()) throw std::invalid_argument("tile_copies: empty point set");
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const Point& p : ps) {
    lo = std::min(lo, p.x);
    hi = std::max(hi, p.x);
  }
  const double pitch = (hi - lo) + gap;
  std::vector<Point> pts;
  pts.reserve(ps.size() * r);
  for (std::size_t c = 0; c < r; ++c) {
    for (const Point& p : ps) pts.push_back({p.x + double(c) * pitch, p.y});
  }
  return PointSet(std::move(pts));
}

/// An instance built from a spec, with any orders the family defines.
struct GeneratedInstance {
  PointSet points;
  std::map<std::string, StackingOrder> orders;
};

inline const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> names{"grid", "concentric", "spiral", "random_dense"};
  return names;
}

/// Builds a family instance. Size is taken from `k` or from `n` (which must
/// be a perfect square for grid/concentric/spiral).
inline GeneratedInstance generate(const GeneratorSpec& spec, std::uint64_t seed = 0) {
  auto side = [&]() -> std::size_t {
    if (spec.params.count("k")) return static_cast<std::size_t>(spec.param("k"));
    return exact_sqrt(static_cast<std::size_t>(spec.param("n")));
  };
  if (spec.family == "grid") return {grid(side()), {}};
  if (spec.family == "concentric") {
    auto inst = concentric_rings(side());
    return {std::move(inst.points), {{"canonical", std::move(inst.canonical)}}};
  }
  if (spec.family == "spiral") {
    const std::size_t k = side();
    const std::size_t n = k * k;
    auto inst = log_spiral(n, spec.param_or("b", default_spiral_b(n)));
    return {std::move(inst.points), {{"spiral", std::move(inst.spiral)}, {"ray", std::move(inst.ray)}}};
  }
  if (spec.family == "random_dense") {
    return {random_dense(static_cast<std::size_t>(spec.param("n")), spec.param_or("C", 2.0), seed), {}};
  }
  std::string valid;
  for (const auto& f : generator_families()) valid += (valid.empty() ? "" : ", ") + f;
  throw std::invalid_argument("unknown generator family '" + spec.family + "' (valid: " + valid + ")");
}

}  // namespace visper
