#include "msn/neighborhood.hpp"

#include <algorithm>
#include <string>

#include "msn/error.hpp"

namespace msn {

bool NeighborSet::contains(NodeId y) const {
  return std::binary_search(members.begin(), members.end(), y);
}

void check_alpha(const MultiLayerNetwork& net, int alpha) {
  if (alpha < 1 || static_cast<std::size_t>(alpha) > net.layer_count()) {
    throw AlphaOutOfRange("alpha " + std::to_string(alpha) + " outside [1, " +
                          std::to_string(net.layer_count()) + "]");
  }
}

NeighborSet local_neighborhood(const MultiLayerNetwork& net, NodeId x, LayerId layer) {
  net.check_node(x);
  net.check_layer(layer);
  NeighborSet result{x, layer, {}};
  auto collect = [&](std::span<const Adjacent> adjacency) {
    for (const Adjacent& a : adjacency) {
      if (a.layer == layer) {
        result.members.push_back(a.neighbor);
      }
    }
  };
  collect(net.out_adjacency(x));
  collect(net.in_adjacency(x));
  std::sort(result.members.begin(), result.members.end());
  result.members.erase(std::unique(result.members.begin(), result.members.end()),
                       result.members.end());
  return result;
}

std::uint32_t layer_support(const MultiLayerNetwork& net, NodeId x, NodeId y) {
  net.check_node(x);
  net.check_node(y);
  auto run = [y](std::span<const Adjacent> adjacency) {
    auto lo = std::partition_point(adjacency.begin(), adjacency.end(),
                                   [y](const Adjacent& a) { return a.neighbor < y; });
    auto hi = std::partition_point(lo, adjacency.end(),
                                   [y](const Adjacent& a) { return a.neighbor == y; });
    return std::span<const Adjacent>(lo, hi);
  };
  const auto out = run(net.out_adjacency(x));
  const auto in = run(net.in_adjacency(x));
  std::uint32_t support = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < out.size() || j < in.size()) {
    if (j == in.size() || (i < out.size() && out[i].layer < in[j].layer)) {
      ++i;
    } else if (i == out.size() || in[j].layer < out[i].layer) {
      ++j;
    } else {
      ++i;
      ++j;
    }
    ++support;
  }
  return support;
}

NeighborSet multi_layer_neighborhood(const MultiLayerNetwork& net, NodeId x, int alpha) {
  net.check_node(x);
  check_alpha(net, alpha);
  NeighborSet result{x, NeighborSet::Alpha{alpha}, {}};
  const auto threshold = static_cast<std::uint32_t>(alpha);
  for_each_neighbor(net, x, [&](const NeighborGroup& g) {
    if (g.support >= threshold) {
      result.members.push_back(g.neighbor);
    }
  });
  return result;
}

std::uint32_t max_layer_support(const MultiLayerNetwork& net, NodeId x) {
  std::uint32_t best = 0;
  for_each_neighbor(net, x, [&](const NeighborGroup& g) { best = std::max(best, g.support); });
  return best;
}

}  // namespace msn
