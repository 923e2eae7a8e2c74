#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace sensync {

/// One of the 256 elementary cellular automaton local rules.
///
/// The truth table is packed into the Wolfram number itself: bit
/// (x1*4 + x2*2 + x3) of `wolfram` holds h(x1,x2,x3), i.e. the triple
/// (x1,x2,x3) is read as a 3-bit big-endian index.
struct LocalRule {
  std::uint8_t wolfram = 0;

  constexpr bool apply(bool left, bool center, bool right) const {
    const int idx = (left << 2) | (center << 1) | int(right);
    return (wolfram >> idx) & 1;
  }

  std::array<bool, 8> table() const {
    std::array<bool, 8> t{};
    for (int i = 0; i < 8; ++i) t[i] = (wolfram >> i) & 1;
    return t;
  }

  bool left_right_symmetric() const;

  friend bool operator==(LocalRule, LocalRule) = default;
};

inline bool apply_local(LocalRule rule, bool left, bool center, bool right) {
  return rule.apply(left, center, right);
}

/// Wolfram number of a truth table: sum of h(x1,x2,x3) * 2^(4*x1+2*x2+x3).
int wolfram_of(const std::array<bool, 8>& table);

enum class RuleTransform { identity, reflection, negation, reflected_negation };

/// The four symmetry transforms. Reflection swaps the left/right inputs,
/// negation conjugates by bitwise complement, and reflected_negation is
/// their composition (the group closes with order dividing 4).
LocalRule transform(LocalRule rule, RuleTransform which);

/// All distinct Wolfram numbers in the orbit of `rule` under the four
/// transforms, sorted ascending.
std::vector<int> orbit(LocalRule rule);

/// Minimum Wolfram number over the rule's orbit.
int class_representative(LocalRule rule);

/// The 88 class representatives over all 256 rules, sorted ascending,
/// computed from the orbits.
const std::vector<int>& all_class_representatives();

/// Embedded copy of the published 88-class list, for cross-checking the
/// computed representatives.
const std::vector<int>& published_class_representatives();

}  // namespace sensync
