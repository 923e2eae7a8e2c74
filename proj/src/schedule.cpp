#include "sensync/schedule.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace sensync {

OrderedPartition OrderedPartition::synchronous(int n) {
  OrderedPartition d;
  d.n = n;
  d.blocks.emplace_back();
  for (int i = 0; i < n; ++i) d.blocks.back().push_back(i);
  return d;
}

bool OrderedPartition::well_formed() const {
  std::vector<int> seen(n, 0);
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    for (int i : b) {
      if (i < 0 || i >= n || seen[i]) return false;
      seen[i] = 1;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

void ArcLabeling::set_cw(int i, bool m) {
  const std::uint32_t b = 1u << (2 * mod(i));
  bits = m ? (bits | b) : (bits & ~b);
}

void ArcLabeling::set_ccw(int i, bool m) {
  const std::uint32_t b = 1u << (2 * mod(i) + 1);
  bits = m ? (bits | b) : (bits & ~b);
}

bool ArcLabeling::minus(int from, int to) const {
  if (mod(from + 1) == mod(to)) return cw_minus(from);
  if (mod(to + 1) == mod(from)) return ccw_minus(to);
  throw std::invalid_argument("ArcLabeling::minus: cells are not ring-adjacent");
}

ArcLabeling ArcLabeling::rotated() const {
  ArcLabeling out{n, 0};
  for (int i = 0; i < n; ++i) {
    out.set_cw(i, cw_minus(i + 1));
    out.set_ccw(i, ccw_minus(i + 1));
  }
  return out;
}

ArcLabeling ArcLabeling::mirrored() const {
  ArcLabeling out{n, 0};
  for (int i = 0; i < n; ++i) {
    out.set_cw(i, ccw_minus(mod(n - 1 - i)));
    out.set_ccw(i, cw_minus(mod(n - 1 - i)));
  }
  return out;
}

std::string ArcLabeling::to_hex() const {
  const int digits = (2 * n + 3) / 4;
  std::string hex(digits, '0');
  for (int d = 0; d < digits; ++d) {
    const unsigned nibble = (bits >> (4 * (digits - 1 - d))) & 0xFu;
    hex[d] = "0123456789abcdef"[nibble];
  }
  return "n=" + std::to_string(n) + ":" + hex;
}

ArcLabeling ArcLabeling::from_hex(const std::string& s) {
  if (s.rfind("n=", 0) != 0) throw std::invalid_argument("labeling string must start with n=");
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("labeling string missing ':'");
  ArcLabeling lab;
  lab.n = std::stoi(s.substr(2, colon - 2));
  lab.bits = std::uint32_t(std::stoul(s.substr(colon + 1), nullptr, 16));
  return lab;
}

ArcLabeling label_of(const OrderedPartition& delta) {
  if (!delta.well_formed()) throw std::invalid_argument("label_of: malformed partition");
  std::vector<int> block_index(delta.n);
  for (std::size_t k = 0; k < delta.blocks.size(); ++k)
    for (int i : delta.blocks[k]) block_index[i] = int(k);
  ArcLabeling lab{delta.n, 0};
  for (int i = 0; i < delta.n; ++i) {
    const int j = (i + 1) % delta.n;
    lab.set_cw(i, block_index[i] < block_index[j]);
    lab.set_ccw(i, block_index[j] < block_index[i]);
  }
  return lab;
}

namespace {

// Derived digraph of a labeling: plus arcs kept, minus arcs reversed.
// Adjacency as per-vertex bitmasks, plus the subset of edges that came
// from a minus label.
struct DerivedGraph {
  std::vector<std::uint32_t> adj;
  std::vector<std::pair<int, int>> minus_edges;

  explicit DerivedGraph(const ArcLabeling& lab) : adj(lab.n, 0) {
    for (int i = 0; i < lab.n; ++i) {
      const int j = (i + 1) % lab.n;
      if (lab.cw_minus(i)) {
        adj[j] |= 1u << i;
        minus_edges.emplace_back(j, i);
      } else {
        adj[i] |= 1u << j;
      }
      if (lab.ccw_minus(i)) {
        adj[i] |= 1u << j;
        minus_edges.emplace_back(i, j);
      } else {
        adj[j] |= 1u << i;
      }
    }
  }
};

std::vector<std::uint32_t> transitive_closure(const std::vector<std::uint32_t>& adj) {
  const int n = int(adj.size());
  std::vector<std::uint32_t> reach = adj;
  for (bool changed = true; changed;) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      std::uint32_t r = reach[u];
      for (std::uint32_t m = reach[u]; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        r |= reach[v];
      }
      if (r != reach[u]) {
        reach[u] = r;
        changed = true;
      }
    }
  }
  return reach;
}

}  // namespace

bool is_valid(const ArcLabeling& lab) {
  // An edge u->v lies on some cycle iff v reaches u; a forbidden cycle
  // exists iff that holds for an edge derived from a minus arc.
  const DerivedGraph g(lab);
  const auto reach = transitive_closure(g.adj);
  for (auto [u, v] : g.minus_edges)
    if ((reach[v] >> u) & 1u) return false;
  return true;
}

long long valid_labeling_count(int n) {
  long long p3 = 1;
  for (int i = 0; i < n; ++i) p3 *= 3;
  return p3 - (2LL << n) + 2;
}

int size_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("SENSYNC_NCAP")) {
      const int v = std::atoi(env);
      if (v >= 3 && 2 * v < 31) return v;
    }
    return 12;
  }();
  return cap;
}

namespace {

// Wrap-around forbidden cycles on the ring. The derived digraph of a
// two-cycle-free labeling only has simple cycles that wind the whole ring:
// a clockwise step i->i+1 exists via a plus (i,i+1) or a reversed minus
// (i+1,i). The winding cycle is forbidden iff every step exists and a
// minus-backed step is available at some position.
bool has_wrap_forbidden_cycle(const ArcLabeling& lab) {
  bool cw_all = true, cw_minus_used = false;
  bool ccw_all = true, ccw_minus_used = false;
  for (int i = 0; i < lab.n; ++i) {
    const bool cw_step = !lab.cw_minus(i) || lab.ccw_minus(i);
    const bool ccw_step = !lab.ccw_minus(i) || lab.cw_minus(i);
    cw_all &= cw_step;
    ccw_all &= ccw_step;
    cw_minus_used |= lab.ccw_minus(i);
    ccw_minus_used |= lab.cw_minus(i);
  }
  return (cw_all && cw_minus_used) || (ccw_all && ccw_minus_used);
}

void enumerate_rec(ArcLabeling& lab, int i, std::vector<ArcLabeling>& out) {
  if (i == lab.n) {
    if (!has_wrap_forbidden_cycle(lab)) out.push_back(lab);
    return;
  }
  // Three states per adjacent pair; both-minus is a forbidden two-cycle.
  for (int cw = 0; cw < 2; ++cw) {
    for (int ccw = 0; ccw < 2; ++ccw) {
      if (cw && ccw) continue;
      lab.set_cw(i, cw);
      lab.set_ccw(i, ccw);
      enumerate_rec(lab, i + 1, out);
    }
  }
  lab.set_cw(i, false);
  lab.set_ccw(i, false);
}

}  // namespace

std::vector<ArcLabeling> enumerate_valid_labelings(int n) {
  if (n < 3 || n > size_cap())
    throw std::out_of_range("enumerate_valid_labelings: n outside [3, size_cap()]");
  std::vector<ArcLabeling> out;
  out.reserve(std::size_t(valid_labeling_count(n)));
  ArcLabeling lab{n, 0};
  enumerate_rec(lab, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

OrderedPartition realize(const ArcLabeling& lab) {
  if (!is_valid(lab)) throw std::invalid_argument("realize: invalid labeling");
  // Precedence constraints: minus (i,j) forces block(i) < block(j), and
  // plus (i,j) forces block(j) <= block(i). Longest-path layering of the
  // lower-bound system; validity keeps the strict part acyclic.
  struct Edge {
    int from, to, weight;
  };
  std::vector<Edge> edges;
  for (int i = 0; i < lab.n; ++i) {
    const int j = (i + 1) % lab.n;
    if (lab.cw_minus(i))
      edges.push_back({i, j, 1});
    else
      edges.push_back({j, i, 0});
    if (lab.ccw_minus(i))
      edges.push_back({j, i, 1});
    else
      edges.push_back({i, j, 0});
  }
  std::vector<int> level(lab.n, 0);
  for (int pass = 0;; ++pass) {
    bool changed = false;
    for (const auto& e : edges) {
      if (level[e.to] < level[e.from] + e.weight) {
        level[e.to] = level[e.from] + e.weight;
        changed = true;
      }
    }
    if (!changed) break;
    if (pass > 2 * lab.n + 2) throw std::logic_error("realize: relaxation did not converge");
  }
  std::map<int, std::vector<int>> by_level;
  for (int i = 0; i < lab.n; ++i) by_level[level[i]].push_back(i);
  OrderedPartition delta;
  delta.n = lab.n;
  for (auto& [lvl, cells] : by_level) delta.blocks.push_back(std::move(cells));
  return delta;
}

bool equivalent(const OrderedPartition& d1, const OrderedPartition& d2) {
  if (d1.n != d2.n) throw std::invalid_argument("equivalent: mismatched n");
  return label_of(d1) == label_of(d2);
}

}  // namespace sensync
