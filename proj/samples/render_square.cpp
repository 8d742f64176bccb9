// Writes square.svg: four disks with their visible arcs highlighted.
#include <cstdio>

#include "visper/visper.hpp"

int main() {
  using namespace visper;
  const PointSet ps({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  SvgOptions opt;
  opt.overlay_arcs = true;
  const auto doc = render_svg(ps, StackingOrder::identity(4), "square.svg", opt);
  std::printf("wrote square.svg (%zu visible arcs)\n", doc.arcs.size());
}
