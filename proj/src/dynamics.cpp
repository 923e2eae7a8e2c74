#include "sensync/dynamics.hpp"

#include <stdexcept>

namespace sensync {

std::string DynamicsMap::key() const {
  std::string k(images.size() * 2, '\0');
  for (std::size_t x = 0; x < images.size(); ++x) {
    k[2 * x] = char(images[x] & 0xFF);
    k[2 * x + 1] = char(images[x] >> 8);
  }
  return k;
}

Configuration step(LocalRule rule, const OrderedPartition& delta, Configuration x, int n) {
  if (delta.n != n || !delta.well_formed())
    throw std::invalid_argument("step: schedule does not partition the ring");
  for (const auto& block : delta.blocks) {
    Configuration y = x;
    for (int i : block) {
      const bool left = (x >> ((i + n - 1) % n)) & 1u;
      const bool center = (x >> i) & 1u;
      const bool right = (x >> ((i + 1) % n)) & 1u;
      const Configuration bit = 1u << i;
      y = rule.apply(left, center, right) ? (y | bit) : (y & ~bit);
    }
    x = y;
  }
  return x;
}

DynamicsMap dynamics_map(LocalRule rule, const ArcLabeling& lab) {
  const OrderedPartition delta = realize(lab);
  DynamicsMap dm;
  dm.n = lab.n;
  dm.rule = rule.wolfram;
  dm.images.resize(std::size_t(1) << lab.n);
  for (Configuration x = 0; x < dm.images.size(); ++x)
    dm.images[x] = std::uint16_t(step(rule, delta, x, lab.n));
  return dm;
}

InfluenceSpan influence_span(const ArcLabeling& lab) {
  if (!is_valid(lab)) throw std::invalid_argument("influence_span: invalid labeling");
  const int n = lab.n;
  InfluenceSpan s;
  s.n = n;
  s.d_left.resize(n);
  s.d_right.resize(n);
  s.d_set.resize(n);
  for (int i = 0; i < n; ++i) {
    // d_left(i) = max k with lab((i-j, i-j+1)) minus for all 0 < j < k;
    // arc (i-j, i-j+1) is the clockwise arc at index i-j.
    int dl = 1;
    while (dl < n && lab.cw_minus(i - dl)) ++dl;
    int dr = 1;
    while (dr < n && lab.ccw_minus(i + dr - 1)) ++dr;
    s.d_left[i] = dl;
    s.d_right[i] = dr;
    std::uint32_t mask = 0;
    for (int k = -dl; k <= dr; ++k) mask |= 1u << lab.mod(i + k);
    s.d_set[i] = mask;
  }
  return s;
}

}  // namespace sensync
