#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace msn {

/// Dense internal index of a node. Indices are contiguous from 0.
struct NodeId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

/// Dense internal index of a layer. Indices are contiguous from 0.
struct LayerId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(LayerId, LayerId) = default;
};

/// One directed edge <source, target, layer> with its weight.
struct Edge {
  NodeId source;
  NodeId target;
  LayerId layer;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Adjacency entry seen from one endpoint: the other endpoint, the layer and
/// the weight of the underlying edge.
struct Adjacent {
  NodeId neighbor;
  LayerId layer;
  double weight = 1.0;
};

struct NetworkCounts {
  std::size_t nodes = 0;
  std::size_t layers = 0;
  std::size_t edges = 0;
  std::vector<std::size_t> edges_per_layer;
};

/// Bidirectional label <-> dense index dictionary.
class LabelIndex {
 public:
  /// Returns the index of `label`, registering it when new.
  std::uint32_t intern(std::string_view label);
  std::optional<std::uint32_t> find(std::string_view label) const;
  const std::string& label(std::uint32_t index) const { return labels_.at(index); }
  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  void reserve(std::size_t n);

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t, Hash, std::equal_to<>> index_;
};

class MultiLayerNetwork;

/// Mutable, single-writer construction phase of a multi-layer network.
///
/// Enforces the structural invariants eagerly: no loops, at most one edge per
/// ordered (source, target, layer) triple, finite non-negative weights.
/// `build()` freezes the contents into an immutable MultiLayerNetwork.
class NetworkBuilder {
 public:
  NetworkBuilder() = default;

  /// Idempotent: an existing label returns its existing id.
  NodeId add_node(std::string_view label);
  /// Idempotent: an existing label returns its existing id.
  LayerId add_layer(std::string_view label);

  /// Throws LoopRejected, DuplicateEdge, InvalidWeight, UnknownNode or
  /// UnknownLayer.
  void add_edge(NodeId source, NodeId target, LayerId layer, double weight = 1.0);
  /// Like add_edge, but returns false instead of throwing DuplicateEdge.
  bool try_add_edge(NodeId source, NodeId target, LayerId layer, double weight = 1.0);

  std::optional<double> edge_weight(NodeId source, NodeId target, LayerId layer) const;
  /// Replaces the weight of an existing edge.
  void set_edge_weight(NodeId source, NodeId target, LayerId layer, double weight);

  std::optional<NodeId> find_node(std::string_view label) const;
  std::optional<LayerId> find_layer(std::string_view label) const;

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t layer_count() const noexcept { return layers_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  void reserve_edges(std::size_t n);

  MultiLayerNetwork build() &&;

 private:
  struct Key {
    std::uint32_t source;
    std::uint32_t target;
    std::uint32_t layer;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  void check_node(NodeId id) const;
  void check_layer(LayerId id) const;

  LabelIndex nodes_;
  LabelIndex layers_;
  std::vector<Edge> edges_;
  std::unordered_map<Key, std::size_t, KeyHash> edge_index_;
};

/// Immutable multi-layer social network <V, E, L>.
///
/// Edges are kept sorted by (layer, source, target). Each node owns an
/// outgoing and an incoming adjacency list, both sorted by (neighbor, layer),
/// so one merged scan yields every neighbor together with the layers it is
/// connected on. Safe for any number of concurrent readers.
class MultiLayerNetwork {
 public:
  MultiLayerNetwork() = default;

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t layer_count() const noexcept { return layers_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& node_label(NodeId id) const;
  const std::string& layer_label(LayerId id) const;
  std::span<const std::string> node_labels() const noexcept { return nodes_.labels(); }
  std::span<const std::string> layer_labels() const noexcept { return layers_.labels(); }

  std::optional<NodeId> find_node(std::string_view label) const;
  std::optional<LayerId> find_layer(std::string_view label) const;
  /// Like find_node but throws UnknownNode.
  NodeId node(std::string_view label) const;
  /// Like find_layer but throws UnknownLayer.
  LayerId layer(std::string_view label) const;

  void check_node(NodeId id) const;
  void check_layer(LayerId id) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Edge> layer_edges(LayerId layer) const;
  std::span<const Adjacent> out_adjacency(NodeId x) const;
  std::span<const Adjacent> in_adjacency(NodeId x) const;

  std::optional<double> edge_weight(NodeId source, NodeId target, LayerId layer) const;

  NetworkCounts counts() const;
  /// Nodes with at least one incident edge, in index order.
  std::vector<NodeId> active_nodes() const;
  /// Same node set, layer set {layer}, and only the edges of that layer.
  MultiLayerNetwork layer_subnetwork(LayerId layer) const;

  /// Structural equality by labels: same node labels, same layer labels, same
  /// labelled edges with identical weights. Internal indices may differ.
  friend bool operator==(const MultiLayerNetwork& a, const MultiLayerNetwork& b);

 private:
  friend class NetworkBuilder;

  LabelIndex nodes_;
  LabelIndex layers_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> layer_offsets_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Adjacent> out_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Adjacent> in_;
};

}  // namespace msn
