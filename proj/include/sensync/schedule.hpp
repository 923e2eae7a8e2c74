#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sensync {

/// A block-sequential update schedule: an ordered partition of {0,..,n-1}.
struct OrderedPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  static OrderedPartition synchronous(int n);

  /// Blocks nonempty, pairwise disjoint, union = {0,..,n-1}.
  bool well_formed() const;
};

/// A plus/minus assignment to the 2n arcs of the bidirectional n-cycle.
///
/// Canonical encoding: 2n bits in arc order (0,1),(1,0),(1,2),(2,1),...,
/// (n-1,0),(0,n-1), with plus = 0 and minus = 1. Bit 2i is the clockwise
/// arc (i,i+1), bit 2i+1 the counterclockwise arc (i+1,i).
struct ArcLabeling {
  int n = 0;
  std::uint32_t bits = 0;

  /// Label of the clockwise arc (i, i+1); true means minus.
  bool cw_minus(int i) const { return (bits >> (2 * mod(i))) & 1u; }
  /// Label of the counterclockwise arc (i+1, i); true means minus.
  bool ccw_minus(int i) const { return (bits >> (2 * mod(i) + 1)) & 1u; }

  void set_cw(int i, bool minus);
  void set_ccw(int i, bool minus);

  /// Label of arc (from, to); the cells must be ring-adjacent.
  bool minus(int from, int to) const;

  /// Left rotation sigma: result((i,j)) = this((i+1,j+1)).
  ArcLabeling rotated() const;
  /// Ring reflection about cell 0: result((i,j)) = this((-i,-j)). A graph
  /// automorphism of the cycle, so it preserves validity; it conjugates
  /// the dynamics of left/right-symmetric rules.
  ArcLabeling mirrored() const;

  /// "n=<n>:<hex>" with the canonical 2n-bit encoding, low bit last.
  std::string to_hex() const;
  static ArcLabeling from_hex(const std::string& s);

  int mod(int i) const { return ((i % n) + n) % n; }

  friend bool operator==(const ArcLabeling&, const ArcLabeling&) = default;
  friend auto operator<=>(const ArcLabeling&, const ArcLabeling&) = default;
};

/// Arc (i,j) gets minus iff i's block strictly precedes j's block.
ArcLabeling label_of(const OrderedPartition& delta);

/// Validity per the forbidden-cycle characterization: reverse the minus
/// arcs and look for a cycle through at least one minus arc. Decided by
/// reachability on the derived digraph, so it accepts arbitrary labelings
/// of the ring (including ones no schedule realizes).
bool is_valid(const ArcLabeling& lab);

/// Number of valid labelings of the size-n ring: 3^n - 2^(n+1) + 2.
long long valid_labeling_count(int n);

/// All valid labelings of the size-n ring, each exactly once, ordered by
/// canonical encoding. Depth-first over per-edge-pair states with
/// two-cycle pruning; the wrap-around forbidden cycles are checked last.
/// Throws std::out_of_range unless 3 <= n <= size_cap().
std::vector<ArcLabeling> enumerate_valid_labelings(int n);

/// A schedule whose labeling is `lab`. Blocks are assigned by longest-path
/// layering of the precedence constraints (minus arcs strict, plus arcs
/// non-strict reversed). Throws std::invalid_argument if the labeling is
/// invalid.
OrderedPartition realize(const ArcLabeling& lab);

/// True iff the two schedules induce the same labeling.
/// Throws std::invalid_argument on mismatched n.
bool equivalent(const OrderedPartition& d1, const OrderedPartition& d2);

/// Largest ring size accepted by the enumeration paths. Defaults to 12;
/// the SENSYNC_NCAP environment variable overrides it.
int size_cap();

}  // namespace sensync
