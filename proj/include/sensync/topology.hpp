#pragma once

#include <utility>
#include <vector>

#include "sensync/rule.hpp"

namespace sensync {

/// Effective (non-redundant) influences of a rule on the size-n ring.
///
/// By uniformity of ECA the answer is rotation invariant, so it is decided
/// once per direction by probing the 8 neighborhood patterns: the arc
/// (i,i+1) is effective iff flipping the left input can change the output,
/// and (i+1,i) iff flipping the right input can.
struct EffectiveArcs {
  int n = 0;
  bool clockwise = false;         // arcs (i, i+1)
  bool counterclockwise = false;  // arcs (i+1, i)

  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
      if (clockwise) out.emplace_back(i, (i + 1) % n);
      if (counterclockwise) out.emplace_back((i + 1) % n, i);
    }
    return out;
  }

  std::size_t count() const {
    return std::size_t(n) * (int(clockwise) + int(counterclockwise));
  }
};

/// Throws std::invalid_argument for n < 3 (neighborhoods would alias).
EffectiveArcs effective_arcs(LocalRule rule, int n);

}  // namespace sensync
