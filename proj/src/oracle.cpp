#include "sensync/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "sensync/dynamics.hpp"

namespace sensync {
namespace oracle {

void enumerate_ordered_partitions(int n,
                                  const std::function<void(const OrderedPartition&)>& fn) {
  if (n < 1 || n > 7)
    throw std::out_of_range("enumerate_ordered_partitions: n outside [1, 7]");
  // Restricted-growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<int> rgs(n, 0);
  const auto emit_orderings = [&](int num_blocks) {
    std::vector<int> perm(num_blocks);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // perm[k] = which set-partition block fires k-th.
      OrderedPartition delta;
      delta.n = n;
      delta.blocks.assign(num_blocks, {});
      std::vector<int> position(num_blocks);
      for (int k = 0; k < num_blocks; ++k) position[perm[k]] = k;
      for (int i = 0; i < n; ++i) delta.blocks[position[rgs[i]]].push_back(i);
      fn(delta);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  const std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      emit_orderings(max_used + 1);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(max_used, b));
    }
  };
  rec(1, 0);
}

long long ordered_bell(int n) {
  std::vector<long long> a(n + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long binom = 1;  // C(m, k)
    for (int k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      a[m] += binom * a[m - k];
    }
  }
  return a[n];
}

long long cyclic_word_sum(int n) {
  if (n < 1 || n > 14) throw std::out_of_range("cyclic_word_sum: n outside [1, 14]");
  long long sum = 0;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    // bit i set <=> u_i = plus
    const int plus = std::popcount(u);
    int plus_minus = 0;
    for (int i = 0; i < n; ++i)
      if (((u >> i) & 1u) && !((u >> ((i + 1) % n)) & 1u)) ++plus_minus;
    sum += 1LL << (plus - plus_minus);
  }
  return sum;
}

long long naive_dynamics_count(LocalRule rule, int n) {
  if (n < 1 || n > 6) throw std::out_of_range("naive_dynamics_count: n outside [1, 6]");
  std::unordered_set<std::string> keys;
  enumerate_ordered_partitions(n, [&](const OrderedPartition& delta) {
    std::string key;
    key.reserve(std::size_t(1) << n);
    for (Configuration x = 0; x < (1u << n); ++x)
      key.push_back(char(step(rule, delta, x, n)));
    keys.insert(std::move(key));
  });
  return (long long)keys.size();
}

}  // namespace oracle
}  // namespace sensync
