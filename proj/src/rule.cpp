#include "sensync/rule.hpp"

#include <algorithm>
#include <set>

namespace sensync {

bool LocalRule::left_right_symmetric() const {
  for (int l = 0; l < 2; ++l)
    for (int c = 0; c < 2; ++c)
      for (int r = 0; r < 2; ++r)
        if (apply(l, c, r) != apply(r, c, l)) return false;
  return true;
}

int wolfram_of(const std::array<bool, 8>& table) {
  int w = 0;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2)
      for (int x3 = 0; x3 < 2; ++x3)
        if (table[(x1 << 2) | (x2 << 1) | x3]) w += 1 << ((x1 << 2) | (x2 << 1) | x3);
  return w;
}

LocalRule transform(LocalRule rule, RuleTransform which) {
  std::array<bool, 8> t{};
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int x2 = 0; x2 < 2; ++x2) {
      for (int x3 = 0; x3 < 2; ++x3) {
        bool v;
        switch (which) {
          case RuleTransform::identity:
            v = rule.apply(x1, x2, x3);
            break;
          case RuleTransform::reflection:
            v = rule.apply(x3, x2, x1);
            break;
          case RuleTransform::negation:
            v = !rule.apply(!x1, !x2, !x3);
            break;
          case RuleTransform::reflected_negation:
            v = !rule.apply(!x3, !x2, !x1);
            break;
        }
        t[(x1 << 2) | (x2 << 1) | x3] = v;
      }
    }
  }
  return LocalRule{std::uint8_t(wolfram_of(t))};
}

std::vector<int> orbit(LocalRule rule) {
  std::set<int> o;
  for (auto w : {RuleTransform::identity, RuleTransform::reflection, RuleTransform::negation,
                 RuleTransform::reflected_negation})
    o.insert(transform(rule, w).wolfram);
  return {o.begin(), o.end()};
}

int class_representative(LocalRule rule) { return orbit(rule).front(); }

const std::vector<int>& all_class_representatives() {
  static const std::vector<int> reps = [] {
    std::set<int> r;
    for (int w = 0; w < 256; ++w) r.insert(class_representative(LocalRule{std::uint8_t(w)}));
    return std::vector<int>(r.begin(), r.end());
  }();
  return reps;
}

const std::vector<int>& published_class_representatives() {
  static const std::vector<int> table = {
      0,   1,   2,   3,   4,   5,   6,   7,   8,   9,   10,  11,  12,  13,  14,  15,
      18,  19,  22,  23,  24,  25,  26,  27,  28,  29,  30,  32,  33,  34,  35,  36,
      37,  38,  40,  41,  42,  43,  44,  45,  46,  50,  51,  54,  56,  57,  58,  60,
      62,  72,  73,  74,  76,  77,  78,  90,  94,  104, 105, 106, 108, 110, 122, 126,
      128, 130, 132, 134, 136, 138, 140, 142, 146, 150, 152, 154, 156, 160, 162, 164,
      168, 170, 172, 178, 184, 200, 204, 232};
  return table;
}

}  // namespace sensync
