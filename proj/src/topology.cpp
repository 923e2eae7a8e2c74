#include "sensync/topology.hpp"

#include <stdexcept>

namespace sensync {

EffectiveArcs effective_arcs(LocalRule rule, int n) {
  if (n < 3) throw std::invalid_argument("effective_arcs: n must be >= 3");
  EffectiveArcs e;
  e.n = n;
  for (int c = 0; c < 2 && !e.clockwise; ++c)
    for (int r = 0; r < 2 && !e.clockwise; ++r)
      if (rule.apply(0, c, r) != rule.apply(1, c, r)) e.clockwise = true;
  for (int l = 0; l < 2 && !e.counterclockwise; ++l)
    for (int c = 0; c < 2 && !e.counterclockwise; ++c)
      if (rule.apply(l, c, 0) != rule.apply(l, c, 1)) e.counterclockwise = true;
  return e;
}

}  // namespace sensync
