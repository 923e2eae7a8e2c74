#pragma once

#include <functional>

#include "sensync/rule.hpp"
#include "sensync/schedule.hpp"

namespace sensync {
namespace oracle {

// Deliberately naive baselines, coded separately from the fast paths they
// cross-check.

/// Every ordered set partition of {0,..,n-1} exactly once (ordered Bell
/// many), built as restricted-growth set partitions crossed with block
/// permutations. Supports 1 <= n <= 7.
void enumerate_ordered_partitions(int n, const std::function<void(const OrderedPartition&)>& fn);

/// Ordered Bell (Fubini) numbers via a(n) = sum_k C(n,k) a(n-k).
long long ordered_bell(int n);

/// Sum over all words u in {plus,minus}^n of 2^(#plus - #cyclic plus-minus
/// factors). Supports 1 <= n <= 14.
long long cyclic_word_sum(int n);

/// Distinct full image tables of step(rule, Delta, .) over ALL ordered
/// partitions Delta. Supports n <= 6.
long long naive_dynamics_count(LocalRule rule, int n);

}  // namespace oracle
}  // namespace sensync
