#pragma once

// Test-only helpers: fixtures, seeded random networks and a brute-force
// oracle that works on the raw edge list and shares no code with the library's
// adjacency scans.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "msn/io.hpp"
#include "msn/network.hpp"

namespace msn::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(MSN_FIXTURE_DIR) / name;
}

inline MultiLayerNetwork load_fixture(const std::string& name) {
  return read_edge_list(fixture(name));
}

struct RawEdge {
  std::uint32_t source;
  std::uint32_t target;
  std::uint32_t layer;
  double weight;
};

struct RawNetwork {
  std::uint32_t nodes = 0;
  std::uint32_t layers = 0;
  std::vector<RawEdge> edges;
};

/// Node i is labelled "n<i>" and layer j "l<j>", registered in index order so
/// that internal indices equal raw indices.
inline MultiLayerNetwork to_network(const RawNetwork& raw) {
  NetworkBuilder b;
  for (std::uint32_t i = 0; i < raw.nodes; ++i) {
    b.add_node("n" + std::to_string(i));
  }
  for (std::uint32_t l = 0; l < raw.layers; ++l) {
    b.add_layer("l" + std::to_string(l));
  }
  for (const auto& e : raw.edges) {
    b.add_edge(NodeId{e.source}, NodeId{e.target}, LayerId{e.layer}, e.weight);
  }
  return std::move(b).build();
}

struct RandomNetworkOptions {
  std::uint32_t max_nodes = 30;
  std::uint32_t max_layers = 5;
  double max_weight = 10.0;
  bool positive_weights = false;
  bool unit_weights = false;
};

/// Random network with 2..max_nodes nodes, 1..max_layers layers, random
/// density, distinct (source, target, layer) triples and no loops.
inline RawNetwork random_network(std::uint64_t seed, const RandomNetworkOptions& opt = {}) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::uint32_t lo, std::uint32_t hi) {
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
  };
  RawNetwork raw;
  raw.nodes = uniform(2, opt.max_nodes);
  raw.layers = uniform(1, opt.max_layers);
  const double density = std::uniform_real_distribution<double>(0.0, 0.35)(rng);
  std::uniform_real_distribution<double> weight(0.0, opt.max_weight);
  std::bernoulli_distribution keep(density);
  for (std::uint32_t l = 0; l < raw.layers; ++l) {
    for (std::uint32_t s = 0; s < raw.nodes; ++s) {
      for (std::uint32_t t = 0; t < raw.nodes; ++t) {
        if (s == t || !keep(rng)) {
          continue;
        }
        double w = weight(rng);
        if (opt.unit_weights) {
          w = 1.0;
        } else if (opt.positive_weights && w == 0.0) {
          w = 1.0;
        }
        raw.edges.push_back({s, t, l, w});
      }
    }
  }
  std::shuffle(raw.edges.begin(), raw.edges.end(), rng);
  return raw;
}

namespace oracle {

inline std::uint32_t layer_support(const RawNetwork& raw, std::uint32_t x, std::uint32_t y) {
  std::set<std::uint32_t> layers;
  for (const auto& e : raw.edges) {
    if ((e.source == x && e.target == y) || (e.source == y && e.target == x)) {
      layers.insert(e.layer);
    }
  }
  return static_cast<std::uint32_t>(layers.size());
}

inline std::vector<std::uint32_t> mn(const RawNetwork& raw, std::uint32_t x, int alpha) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t y = 0; y < raw.nodes; ++y) {
    if (y != x && layer_support(raw, x, y) >= static_cast<std::uint32_t>(alpha)) {
      members.push_back(y);
    }
  }
  return members;
}

struct Scores {
  double total = 0.0;
  double in = 0.0;
  double out = 0.0;
};

inline Scores cldc(const RawNetwork& raw, std::uint32_t x, int alpha) {
  const auto members = mn(raw, x, alpha);
  const std::set<std::uint32_t> qualifying(members.begin(), members.end());
  double in = 0.0;
  double out = 0.0;
  for (const auto& e : raw.edges) {
    if (e.source == x && qualifying.count(e.target)) {
      out += e.weight;
    }
    if (e.target == x && qualifying.count(e.source)) {
      in += e.weight;
    }
  }
  const double denominator = static_cast<double>(raw.nodes - 1) * raw.layers;
  return {(in + out) / denominator, in / denominator, out / denominator};
}

}  // namespace oracle

inline std::vector<std::uint32_t> indices(const std::vector<NodeId>& ids) {
  std::vector<std::uint32_t> out;
  for (auto id : ids) {
    out.push_back(id.value);
  }
  return out;
}

inline std::set<std::string> labels(const MultiLayerNetwork& net, const std::vector<NodeId>& ids) {
  std::set<std::string> out;
  for (auto id : ids) {
    out.insert(net.node_label(id));
  }
  return out;
}

}  // namespace msn::testing
