// Greedy vs lexicographic order on k x k grids, with a log-log slope fit.
#include <cstdio>
#include <vector>

#include "visper/visper.hpp"

int main() {
  using namespace visper;
  std::vector<std::size_t> ns;
  std::vector<double> greedy, lex;
  for (std::size_t k : {10, 20, 40}) {
    const PointSet ps = grid(k);
    ns.push_back(k * k);
    greedy.push_back(limit_visible_perimeter(ps, greedy_order(ps).order).total);
    lex.push_back(limit_visible_perimeter(ps, lexicographic_order(ps)).total);
    std::printf("n=%5zu  greedy %9.2f  lexicographic %9.2f\n", k * k, greedy.back(), lex.back());
  }
  std::printf("slopes: greedy %.3f, lexicographic %.3f\n", fit_exponent(ns, greedy).slope,
              fit_exponent(ns, lex).slope);
}
