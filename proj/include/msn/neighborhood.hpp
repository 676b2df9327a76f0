#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "msn/network.hpp"

namespace msn {

/// Result of a local or multi-layer neighborhood query. Members are sorted by
/// internal index and never contain the owner.
struct NeighborSet {
  struct Alpha {
    int value = 1;
    friend bool operator==(Alpha, Alpha) = default;
  };

  NodeId owner;
  std::variant<LayerId, Alpha> scope;
  std::vector<NodeId> members;

  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }
  bool contains(NodeId y) const;
};

/// Everything a merged scan knows about one neighbor y of x.
struct NeighborGroup {
  NodeId neighbor;
  /// Distinct layers on which x and y are adjacent in either direction.
  std::uint32_t support = 0;
  /// Sum of w(x, y, l) over layers, ascending layer order.
  double out_weight = 0.0;
  /// Sum of w(y, x, l) over layers, ascending layer order.
  double in_weight = 0.0;
};

/// Calls fn(const NeighborGroup&) for each neighbor of x in ascending index
/// order. A single merge of the outgoing and incoming adjacency lists; every
/// neighborhood and centrality query is built on this scan.
template <typename Fn>
void for_each_neighbor(const MultiLayerNetwork& net, NodeId x, Fn&& fn) {
  const auto out = net.out_adjacency(x);
  const auto in = net.in_adjacency(x);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < out.size() || j < in.size()) {
    NodeId y;
    if (j == in.size() || (i < out.size() && out[i].neighbor <= in[j].neighbor)) {
      y = out[i].neighbor;
    } else {
      y = in[j].neighbor;
    }
    NeighborGroup group{y, 0, 0.0, 0.0};
    std::size_t i_end = i;
    while (i_end < out.size() && out[i_end].neighbor == y) {
      group.out_weight += out[i_end].weight;
      ++i_end;
    }
    std::size_t j_end = j;
    while (j_end < in.size() && in[j_end].neighbor == y) {
      group.in_weight += in[j_end].weight;
      ++j_end;
    }
    // Both runs are sorted by layer: count the union.
    while (i < i_end || j < j_end) {
      if (j == j_end || (i < i_end && out[i].layer < in[j].layer)) {
        ++i;
      } else if (i == i_end || in[j].layer < out[i].layer) {
        ++j;
      } else {
        ++i;
        ++j;
      }
      ++group.support;
    }
    fn(static_cast<const NeighborGroup&>(group));
  }
}

/// Throws AlphaOutOfRange unless 1 <= alpha <= |L|.
void check_alpha(const MultiLayerNetwork& net, int alpha);

/// N(x, l): nodes adjacent to x on layer l in either direction.
NeighborSet local_neighborhood(const MultiLayerNetwork& net, NodeId x, LayerId layer);

/// Number of distinct layers on which x and y are adjacent (either direction).
std::uint32_t layer_support(const MultiLayerNetwork& net, NodeId x, NodeId y);

/// MN(x, alpha): nodes adjacent to x on at least alpha distinct layers.
NeighborSet multi_layer_neighborhood(const MultiLayerNetwork& net, NodeId x, int alpha);

/// Largest layer support over all neighbors of x (0 for isolated nodes).
/// MN(x, alpha) is non-empty iff alpha <= max_layer_support(x).
std::uint32_t max_layer_support(const MultiLayerNetwork& net, NodeId x);

}  // namespace msn
