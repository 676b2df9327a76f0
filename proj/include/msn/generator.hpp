#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "msn/network.hpp"

namespace msn {

enum class WeightMode { constant, exponential };

/// Parameters of the synthetic multi-layer generator.
///
/// Every layer starts from a complete directed seed clique on nodes
/// 0..seed_clique-1 and then grows by directed preferential attachment: the
/// source is uniform over the nodes present so far and the target is drawn
/// proportionally to (in-degree in that layer + 1). Nodes arrive at an even
/// rate so that all n are present when the layer budget is spent. With
/// probability `overlap` a step instead copies the pair of a random edge of
/// another layer, which builds multi-layer adjacency. Layers advance in
/// lockstep, one step each per round.
///
/// Randomness comes from std::mt19937_64 seeded with `seed`; integers and
/// reals are derived from its raw 64-bit output with fixed rules, so output is
/// identical across platforms and standard libraries.
struct GeneratorConfig {
  std::size_t nodes = 1000;
  std::size_t layers = 1;
  /// Upper bound on edges per layer, seed clique included.
  std::size_t edges_per_layer = 5000;
  std::size_t seed_clique = 3;
  double overlap = 0.0;
  std::uint64_t seed = 42;
  WeightMode weights = WeightMode::constant;
  /// Constant weight, or the mean of the exponential weights.
  double weight = 1.0;
  /// Attempts per step before the step is skipped.
  std::size_t max_retries = 16;

  /// Throws ConfigInvalid.
  void validate() const;
};

inline constexpr std::string_view kGeneratorRng = "mt19937_64";

/// Applies one key=value setting (keys: nodes, layers, edges_per_layer,
/// seed_clique, overlap, seed, weights, weight, max_retries). Throws
/// ConfigInvalid on unknown keys or malformed values.
void apply_config_entry(GeneratorConfig& config, std::string_view key, std::string_view value);

/// Reads key=value lines ('#' comments and blank lines allowed) on top of
/// `config`.
void read_config(std::istream& in, GeneratorConfig& config);

/// Human-readable parameter lines, used as edge-list header comments.
std::vector<std::string> describe(const GeneratorConfig& config);

MultiLayerNetwork generate(const GeneratorConfig& config);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t hash = 0xcbf29ce484222325ULL);

/// FNV-1a of the serialized edge list (no extra header lines).
std::uint64_t edge_list_digest(const MultiLayerNetwork& network);

}  // namespace msn
