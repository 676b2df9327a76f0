#include "msn/network.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "msn/error.hpp"

namespace msn {

// ---------------------------------------------------------------------------
// LabelIndex
// ---------------------------------------------------------------------------

std::uint32_t LabelIndex::intern(std::string_view label) {
  if (auto it = index_.find(label); it != index_.end()) {
    return it->second;
  }
  const auto id = static_cast<std::uint32_t>(labels_.size());
  labels_.emplace_back(label);
  index_.emplace(labels_.back(), id);
  return id;
}

std::optional<std::uint32_t> LabelIndex::find(std::string_view label) const {
  if (auto it = index_.find(label); it != index_.end()) {
    return it->second;
  }
  return std::nullopt;
}

void LabelIndex::reserve(std::size_t n) {
  labels_.reserve(n);
  index_.reserve(n);
}

// ---------------------------------------------------------------------------
// NetworkBuilder
// ---------------------------------------------------------------------------

std::size_t NetworkBuilder::KeyHash::operator()(const Key& k) const noexcept {
  // splitmix64 finalizer over the packed triple
  std::uint64_t h = (static_cast<std::uint64_t>(k.source) << 32) ^ k.target;
  h ^= static_cast<std::uint64_t>(k.layer) * 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(h ^ (h >> 31));
}

NodeId NetworkBuilder::add_node(std::string_view label) {
  return NodeId{nodes_.intern(label)};
}

LayerId NetworkBuilder::add_layer(std::string_view label) {
  return LayerId{layers_.intern(label)};
}

void NetworkBuilder::check_node(NodeId id) const {
  if (id.value >= nodes_.size()) {
    throw UnknownNode("unknown node index " + std::to_string(id.value));
  }
}

void NetworkBuilder::check_layer(LayerId id) const {
  if (id.value >= layers_.size()) {
    throw UnknownLayer("unknown layer index " + std::to_string(id.value));
  }
}

namespace {

void check_weight(double weight) {
  if (!std::isfinite(weight) || weight < 0.0) {
    throw InvalidWeight("edge weight must be finite and non-negative");
  }
}

}  // namespace

void NetworkBuilder::add_edge(NodeId source, NodeId target, LayerId layer, double weight) {
  if (!try_add_edge(source, target, layer, weight)) {
    throw DuplicateEdge("duplicate edge '" + nodes_.label(source.value) + "' -> '" +
                        nodes_.label(target.value) + "' on layer '" +
                        layers_.label(layer.value) + "'");
  }
}

bool NetworkBuilder::try_add_edge(NodeId source, NodeId target, LayerId layer, double weight) {
  check_node(source);
  check_node(target);
  check_layer(layer);
  if (source == target) {
    throw LoopRejected("loop edge on node '" + nodes_.label(source.value) + "'");
  }
  check_weight(weight);
  const Key key{source.value, target.value, layer.value};
  auto [it, inserted] = edge_index_.try_emplace(key, edges_.size());
  if (!inserted) {
    return false;
  }
  edges_.push_back(Edge{source, target, layer, weight});
  return true;
}

std::optional<double> NetworkBuilder::edge_weight(NodeId source, NodeId target,
                                                  LayerId layer) const {
  auto it = edge_index_.find(Key{source.value, target.value, layer.value});
  if (it == edge_index_.end()) {
    return std::nullopt;
  }
  return edges_[it->second].weight;
}

void NetworkBuilder::set_edge_weight(NodeId source, NodeId target, LayerId layer,
                                     double weight) {
  check_weight(weight);
  auto it = edge_index_.find(Key{source.value, target.value, layer.value});
  if (it == edge_index_.end()) {
    throw Error("set_edge_weight on an absent edge");
  }
  edges_[it->second].weight = weight;
}

std::optional<NodeId> NetworkBuilder::find_node(std::string_view label) const {
  if (auto id = nodes_.find(label)) {
    return NodeId{*id};
  }
  return std::nullopt;
}

std::optional<LayerId> NetworkBuilder::find_layer(std::string_view label) const {
  if (auto id = layers_.find(label)) {
    return LayerId{*id};
  }
  return std::nullopt;
}

void NetworkBuilder::reserve_edges(std::size_t n) {
  edges_.reserve(n);
  edge_index_.reserve(n);
}

namespace {

bool by_neighbor_then_layer(const Adjacent& a, const Adjacent& b) {
  return std::tie(a.neighbor, a.layer) < std::tie(b.neighbor, b.layer);
}

}  // namespace

MultiLayerNetwork NetworkBuilder::build() && {
  MultiLayerNetwork net;
  net.nodes_ = std::move(nodes_);
  net.layers_ = std::move(layers_);
  net.edges_ = std::move(edges_);
  edge_index_ = {};

  auto& edges = net.edges_;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.layer, a.source, a.target) < std::tie(b.layer, b.source, b.target);
  });

  const std::size_t m = net.nodes_.size();
  const std::size_t num_layers = net.layers_.size();

  net.layer_offsets_.assign(num_layers + 1, 0);
  for (const Edge& e : edges) {
    ++net.layer_offsets_[e.layer.value + 1];
  }
  for (std::size_t l = 0; l < num_layers; ++l) {
    net.layer_offsets_[l + 1] += net.layer_offsets_[l];
  }

  net.out_offsets_.assign(m + 1, 0);
  net.in_offsets_.assign(m + 1, 0);
  for (const Edge& e : edges) {
    ++net.out_offsets_[e.source.value + 1];
    ++net.in_offsets_[e.target.value + 1];
  }
  for (std::size_t i = 0; i < m; ++i) {
    net.out_offsets_[i + 1] += net.out_offsets_[i];
    net.in_offsets_[i + 1] += net.in_offsets_[i];
  }

  net.out_.resize(edges.size());
  net.in_.resize(edges.size());
  {
    std::vector<std::size_t> out_pos(net.out_offsets_.begin(), net.out_offsets_.end() - 1);
    std::vector<std::size_t> in_pos(net.in_offsets_.begin(), net.in_offsets_.end() - 1);
    for (const Edge& e : edges) {
      net.out_[out_pos[e.source.value]++] = Adjacent{e.target, e.layer, e.weight};
      net.in_[in_pos[e.target.value]++] = Adjacent{e.source, e.layer, e.weight};
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::sort(net.out_.begin() + static_cast<std::ptrdiff_t>(net.out_offsets_[i]),
              net.out_.begin() + static_cast<std::ptrdiff_t>(net.out_offsets_[i + 1]),
              by_neighbor_then_layer);
    std::sort(net.in_.begin() + static_cast<std::ptrdiff_t>(net.in_offsets_[i]),
              net.in_.begin() + static_cast<std::ptrdiff_t>(net.in_offsets_[i + 1]),
              by_neighbor_then_layer);
  }
  return net;
}

// ---------------------------------------------------------------------------
// MultiLayerNetwork
// ---------------------------------------------------------------------------

void MultiLayerNetwork::check_node(NodeId id) const {
  if (id.value >= nodes_.size()) {
    throw UnknownNode("unknown node index " + std::to_string(id.value));
  }
}

void MultiLayerNetwork::check_layer(LayerId id) const {
  if (id.value >= layers_.size()) {
    throw UnknownLayer("unknown layer index " + std::to_string(id.value));
  }
}

const std::string& MultiLayerNetwork::node_label(NodeId id) const {
  check_node(id);
  return nodes_.label(id.value);
}

const std::string& MultiLayerNetwork::layer_label(LayerId id) const {
  check_layer(id);
  return layers_.label(id.value);
}

std::optional<NodeId> MultiLayerNetwork::find_node(std::string_view label) const {
  if (auto id = nodes_.find(label)) {
    return NodeId{*id};
  }
  return std::nullopt;
}

std::optional<LayerId> MultiLayerNetwork::find_layer(std::string_view label) const {
  if (auto id = layers_.find(label)) {
    return LayerId{*id};
  }
  return std::nullopt;
}

NodeId MultiLayerNetwork::node(std::string_view label) const {
  if (auto id = find_node(label)) {
    return *id;
  }
  throw UnknownNode("unknown node '" + std::string(label) + "'");
}

LayerId MultiLayerNetwork::layer(std::string_view label) const {
  if (auto id = find_layer(label)) {
    return *id;
  }
  throw UnknownLayer("unknown layer '" + std::string(label) + "'");
}

std::span<const Edge> MultiLayerNetwork::layer_edges(LayerId layer) const {
  check_layer(layer);
  return std::span<const Edge>(edges_).subspan(
      layer_offsets_[layer.value], layer_offsets_[layer.value + 1] - layer_offsets_[layer.value]);
}

std::span<const Adjacent> MultiLayerNetwork::out_adjacency(NodeId x) const {
  check_node(x);
  return std::span<const Adjacent>(out_).subspan(out_offsets_[x.value],
                                                 out_offsets_[x.value + 1] - out_offsets_[x.value]);
}

std::span<const Adjacent> MultiLayerNetwork::in_adjacency(NodeId x) const {
  check_node(x);
  return std::span<const Adjacent>(in_).subspan(in_offsets_[x.value],
                                                in_offsets_[x.value + 1] - in_offsets_[x.value]);
}

std::optional<double> MultiLayerNetwork::edge_weight(NodeId source, NodeId target,
                                                     LayerId layer) const {
  check_node(target);
  check_layer(layer);
  const auto out = out_adjacency(source);
  const Adjacent probe{target, layer, 0.0};
  auto it = std::lower_bound(out.begin(), out.end(), probe, by_neighbor_then_layer);
  if (it == out.end() || it->neighbor != target || it->layer != layer) {
    return std::nullopt;
  }
  return it->weight;
}

NetworkCounts MultiLayerNetwork::counts() const {
  NetworkCounts c;
  c.nodes = node_count();
  c.layers = layer_count();
  c.edges = edge_count();
  c.edges_per_layer.resize(c.layers);
  for (std::size_t l = 0; l < c.layers; ++l) {
    c.edges_per_layer[l] = layer_offsets_[l + 1] - layer_offsets_[l];
  }
  return c;
}

std::vector<NodeId> MultiLayerNetwork::active_nodes() const {
  std::vector<NodeId> active;
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    if (out_offsets_[i + 1] != out_offsets_[i] || in_offsets_[i + 1] != in_offsets_[i]) {
      active.push_back(NodeId{i});
    }
  }
  return active;
}

MultiLayerNetwork MultiLayerNetwork::layer_subnetwork(LayerId layer) const {
  const auto selected = layer_edges(layer);
  NetworkBuilder builder;
  for (const auto& label : nodes_.labels()) {
    builder.add_node(label);
  }
  const LayerId only = builder.add_layer(layers_.label(layer.value));
  builder.reserve_edges(selected.size());
  for (const Edge& e : selected) {
    builder.add_edge(e.source, e.target, only, e.weight);
  }
  return std::move(builder).build();
}

bool operator==(const MultiLayerNetwork& a, const MultiLayerNetwork& b) {
  if (a.node_count() != b.node_count() || a.layer_count() != b.layer_count() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  for (const auto& label : a.node_labels()) {
    if (!b.find_node(label)) {
      return false;
    }
  }
  for (const auto& label : a.layer_labels()) {
    if (!b.find_layer(label)) {
      return false;
    }
  }
  for (const Edge& e : a.edges()) {
    const auto w = b.edge_weight(b.node(a.node_label(e.source)), b.node(a.node_label(e.target)),
                                 b.layer(a.layer_label(e.layer)));
    if (!w || *w != e.weight) {
      return false;
    }
  }
  return true;
}

}  // namespace msn
