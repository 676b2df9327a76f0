#include "msn/generator.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <random>
#include <sstream>
#include <tuple>

#include "msn/error.hpp"
#include "msn/io.hpp"

namespace msn {

void GeneratorConfig::validate() const {
  if (seed_clique < 2) {
    throw ConfigInvalid("seed_clique must be at least 2");
  }
  if (nodes < seed_clique) {
    throw ConfigInvalid("nodes (" + std::to_string(nodes) + ") must be at least seed_clique (" +
                        std::to_string(seed_clique) + ")");
  }
  if (nodes > 0xffffffffULL) {
    throw ConfigInvalid("too many nodes");
  }
  if (layers < 1) {
    throw ConfigInvalid("layers must be at least 1");
  }
  if (!(overlap >= 0.0 && overlap <= 1.0)) {
    throw ConfigInvalid("overlap must lie in [0, 1]");
  }
  if (!std::isfinite(weight) || weight < 0.0 ||
      (weights == WeightMode::exponential && weight == 0.0)) {
    throw ConfigInvalid("weight must be finite and non-negative (positive for exponential)");
  }
  if (max_retries < 1) {
    throw ConfigInvalid("max_retries must be at least 1");
  }
}

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigInvalid("bad value '" + std::string(value) + "' for '" + std::string(key) + "'");
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

void apply_config_entry(GeneratorConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "nodes") {
    config.nodes = parse_number<std::size_t>(key, value);
  } else if (key == "layers") {
    config.layers = parse_number<std::size_t>(key, value);
  } else if (key == "edges_per_layer") {
    config.edges_per_layer = parse_number<std::size_t>(key, value);
  } else if (key == "seed_clique") {
    config.seed_clique = parse_number<std::size_t>(key, value);
  } else if (key == "overlap") {
    config.overlap = parse_number<double>(key, value);
  } else if (key == "seed") {
    config.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "weights") {
    if (value == "constant") {
      config.weights = WeightMode::constant;
    } else if (value == "exponential") {
      config.weights = WeightMode::exponential;
    } else {
      throw ConfigInvalid("weights must be 'constant' or 'exponential'");
    }
  } else if (key == "weight") {
    config.weight = parse_number<double>(key, value);
  } else if (key == "max_retries") {
    config.max_retries = parse_number<std::size_t>(key, value);
  } else {
    throw ConfigInvalid("unknown config key '" + std::string(key) + "'");
  }
}

void read_config(std::istream& in, GeneratorConfig& config) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.starts_with('#')) {
      continue;
    }
    const auto eq = text.find('=');
    try {
      if (eq == std::string_view::npos) {
        throw ConfigInvalid("expected key=value");
      }
      apply_config_entry(config, text.substr(0, eq), text.substr(eq + 1));
    } catch (Error& e) {
      e.set_line(line_no);
      throw;
    }
  }
}

std::vector<std::string> describe(const GeneratorConfig& config) {
  std::ostringstream params;
  params << "nodes=" << config.nodes << " layers=" << config.layers
         << " edges_per_layer=" << config.edges_per_layer << " seed_clique=" << config.seed_clique
         << " overlap=" << format_shortest(config.overlap)
         << " weights=" << (config.weights == WeightMode::constant ? "constant" : "exponential")
         << " weight=" << format_shortest(config.weight) << " max_retries=" << config.max_retries;
  return {"generator: directed preferential attachment, rng=" + std::string(kGeneratorRng) +
              " seed=" + std::to_string(config.seed),
          params.str()};
}

namespace {

/// Draws derived from raw mt19937_64 output with fixed, portable rules.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling on the
  /// largest multiple of bound.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform real in the open interval (0, 1), 53-bit resolution.
  double open_unit() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

struct LayerState {
  LayerId id;
  std::vector<std::pair<NodeId, NodeId>> pairs;  // every edge, in creation order
  std::vector<NodeId> targets;                   // one token per unit of in-degree
};

}  // namespace

MultiLayerNetwork generate(const GeneratorConfig& config) {
  config.validate();
  Random rng(config.seed);
  NetworkBuilder builder;
  for (std::size_t i = 0; i < config.nodes; ++i) {
    builder.add_node(std::to_string(i));
  }
  std::vector<LayerState> layers(config.layers);
  for (std::size_t l = 0; l < config.layers; ++l) {
    layers[l].id = builder.add_layer("l" + std::to_string(l + 1));
    layers[l].pairs.reserve(config.edges_per_layer);
    layers[l].targets.reserve(config.edges_per_layer);
  }
  builder.reserve_edges(config.layers * config.edges_per_layer);

  auto draw_weight = [&] {
    if (config.weights == WeightMode::exponential) {
      return -config.weight * std::log(rng.open_unit());
    }
    return config.weight;
  };
  auto record = [&](LayerState& layer, NodeId source, NodeId target) {
    if (!builder.try_add_edge(source, target, layer.id, draw_weight())) {
      return false;
    }
    layer.pairs.emplace_back(source, target);
    layer.targets.push_back(target);
    return true;
  };

  // Seed clique: every ordered pair, lexicographic, within the budget.
  const std::size_t clique = config.seed_clique;
  std::size_t seeded = 0;
  for (std::uint32_t i = 0; i < clique && seeded < config.edges_per_layer; ++i) {
    for (std::uint32_t j = 0; j < clique && seeded < config.edges_per_layer; ++j) {
      if (i == j) {
        continue;
      }
      for (auto& layer : layers) {
        record(layer, NodeId{i}, NodeId{j});
      }
      ++seeded;
    }
  }

  const std::size_t steps = config.edges_per_layer - seeded;
  const std::size_t arriving = config.nodes - clique;
  for (std::size_t t = 0; t < steps; ++t) {
    // Nodes arrive evenly; all are present after the final step.
    const std::uint64_t present = clique + std::uint64_t{arriving} * (t + 1) / steps;
    for (std::size_t l = 0; l < layers.size(); ++l) {
      LayerState& layer = layers[l];
      for (std::size_t attempt = 0; attempt < config.max_retries; ++attempt) {
        NodeId source;
        NodeId target;
        if (layers.size() > 1 && rng.open_unit() < config.overlap) {
          auto other = rng.below(layers.size() - 1);
          if (other >= l) {
            ++other;
          }
          const auto& donor = layers[other].pairs;
          if (donor.empty()) {
            continue;
          }
          std::tie(source, target) = donor[rng.below(donor.size())];
        } else {
          source = NodeId{static_cast<std::uint32_t>(rng.below(present))};
          const std::uint64_t tokens = layer.targets.size();
          const std::uint64_t pick = rng.below(present + tokens);
          target = pick < present ? NodeId{static_cast<std::uint32_t>(pick)}
                                  : layer.targets[pick - present];
          if (source == target) {
            continue;
          }
        }
        if (record(layer, source, target)) {
          break;
        }
      }
    }
  }
  return std::move(builder).build();
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t hash) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t edge_list_digest(const MultiLayerNetwork& network) {
  std::ostringstream out;
  write_edge_list(network, out);
  return fnv1a64(out.str());
}

}  // namespace msn
