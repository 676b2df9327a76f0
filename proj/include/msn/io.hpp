#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msn/network.hpp"

namespace msn {

// Edge-list text format
// ---------------------
// One record per line, tab separated: source, target, layer and an optional
// weight (absent means 1.0). Blank lines are ignored and lines starting with
// '#' are comments. Two comment forms are also declarations understood by
// this reader:
//
//   #@layer<TAB>label    registers a layer (possibly without edges)
//   #@node<TAB>label     registers a node (possibly isolated)
//
// Any other tool sees them as plain comments.

enum class DuplicatePolicy { error, sum, max, first };
enum class LoopPolicy { error, skip };

struct IngestOptions {
  DuplicatePolicy duplicates = DuplicatePolicy::error;
  LoopPolicy loops = LoopPolicy::error;
  /// Node labels registered before any edge; lets isolated nodes count in m.
  std::vector<std::string> node_manifest;
};

struct EdgeRecord {
  std::string source;
  std::string target;
  std::string layer;
  double weight = 1.0;
};

std::optional<DuplicatePolicy> parse_duplicate_policy(std::string_view name);
std::optional<LoopPolicy> parse_loop_policy(std::string_view name);

/// Parses one data line (no comment, not blank). Throws ParseError or
/// InvalidWeight; the caller attaches the line number.
EdgeRecord parse_edge_record(std::string_view line);

/// Reads a whole edge list. Every error carries the 1-based line number of
/// the record that caused it; parsing stops at the first error.
MultiLayerNetwork parse_edge_list(std::istream& in, const IngestOptions& options = {});
MultiLayerNetwork read_edge_list(const std::filesystem::path& path,
                                 const IngestOptions& options = {});

/// Writes declarations for every layer and every isolated node, then one
/// 4-field line per edge sorted by (layer, source, target). `header` lines are
/// emitted as '#' comments first.
void write_edge_list(const MultiLayerNetwork& network, std::ostream& out,
                     std::span<const std::string> header = {});
void write_edge_list(const MultiLayerNetwork& network, const std::filesystem::path& path,
                     std::span<const std::string> header = {});

/// One non-empty label per line; '#' comments and blank lines are skipped.
std::vector<std::string> parse_node_manifest(std::istream& in);
std::vector<std::string> read_node_manifest(const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_shortest(double value);

}  // namespace msn
