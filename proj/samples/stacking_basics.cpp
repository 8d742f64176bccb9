// Exact visible perimeter versus its limit for a few stacking orders on a
// small random instance.
#include <cstdio>

#include "visper/visper.hpp"

int main() {
  using namespace visper;
  const PointSet ps = random_dense(30, 2.0, 17);

  const struct {
    const char* name;
    StackingOrder order;
  } orders[] = {
      {"identity", StackingOrder::identity(ps.size())},
      {"lexicographic", lexicographic_order(ps)},
      {"monotone", monotone_order(ps).order},
      {"greedy", greedy_order(ps).order},
  };

  std::printf("%-14s %12s %12s\n", "order", "vis(1e-3)", "limit");
  for (const auto& [name, f] : orders) {
    const double vis = visible_perimeter(scale(ps, 1e-3 / ps.min_dist()), f).total;
    std::printf("%-14s %12.4f %12.4f\n", name, vis, limit_visible_perimeter(ps, f).total);
  }
}
