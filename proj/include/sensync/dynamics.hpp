#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sensync/rule.hpp"
#include "sensync/schedule.hpp"

namespace sensync {

/// Configurations are n-bit words: cell i lives at bit position i, all
/// index arithmetic mod n.
using Configuration = std::uint32_t;

/// The full function f^(Delta) on {0,1}^n as a dense 2^n image table.
struct DynamicsMap {
  int n = 0;
  int rule = 0;
  std::vector<std::uint16_t> images;  // images[x] = f^(Delta)(x)

  /// Exact byte key of the image table, for dedup. Equality of keys is
  /// equality of dynamics; hashes never stand in for the full table.
  std::string key() const;

  friend bool operator==(const DynamicsMap&, const DynamicsMap&) = default;
};

/// One application of f^(Delta): blocks fire in order, cells within a
/// block all read the pre-block state.
Configuration step(LocalRule rule, const OrderedPartition& delta, Configuration x, int n);

/// Image table of f^(Delta) for any Delta realizing `lab` (equivalent
/// schedules share the dynamics, so the choice does not matter).
DynamicsMap dynamics_map(LocalRule rule, const ArcLabeling& lab);

/// Chain-of-influence extents per cell: d_left(i) counts how far the
/// minus labels on clockwise arcs chain leftwards into the update of cell
/// i, d_right symmetrically on counterclockwise arcs, and span(i) is the
/// cell interval [i - d_left(i), i + d_right(i)] as an n-bit mask.
struct InfluenceSpan {
  int n = 0;
  std::vector<int> d_left;
  std::vector<int> d_right;
  std::vector<std::uint32_t> d_set;

  friend bool operator==(const InfluenceSpan&, const InfluenceSpan&) = default;
};

/// Throws std::invalid_argument on an invalid labeling.
InfluenceSpan influence_span(const ArcLabeling& lab);

}  // namespace sensync
