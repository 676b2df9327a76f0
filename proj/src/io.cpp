#include "msn/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "msn/error.hpp"

namespace msn {

namespace {

constexpr std::string_view kLayerDecl = "#@layer\t";
constexpr std::string_view kNodeDecl = "#@node\t";

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') {
    line.remove_suffix(1);
  }
  return line;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

std::string_view declared_label(std::string_view line, std::string_view prefix) {
  auto label = line.substr(prefix.size());
  if (label.empty() || label.find('\t') != std::string_view::npos) {
    throw ParseError("malformed declaration '" + std::string(line) + "'");
  }
  return label;
}

}  // namespace

std::optional<DuplicatePolicy> parse_duplicate_policy(std::string_view name) {
  if (name == "error") return DuplicatePolicy::error;
  if (name == "sum") return DuplicatePolicy::sum;
  if (name == "max") return DuplicatePolicy::max;
  if (name == "first") return DuplicatePolicy::first;
  return std::nullopt;
}

std::optional<LoopPolicy> parse_loop_policy(std::string_view name) {
  if (name == "error") return LoopPolicy::error;
  if (name == "skip") return LoopPolicy::skip;
  return std::nullopt;
}

EdgeRecord parse_edge_record(std::string_view line) {
  std::array<std::string_view, 4> fields;
  std::size_t count = 0;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (count == fields.size()) {
      throw ParseError("expected 3 or 4 tab-separated fields, got more");
    }
    fields[count++] = line.substr(start, tab == std::string_view::npos ? tab : tab - start);
    if (tab == std::string_view::npos) {
      break;
    }
    start = tab + 1;
  }
  if (count < 3) {
    throw ParseError("expected 3 or 4 tab-separated fields, got " + std::to_string(count));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (fields[i].empty()) {
      throw ParseError("empty label in field " + std::to_string(i + 1));
    }
  }
  EdgeRecord record{std::string(fields[0]), std::string(fields[1]), std::string(fields[2]), 1.0};
  if (count == 4) {
    const auto text = fields[3];
    double weight = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), weight);
    if (ec == std::errc::result_out_of_range) {
      throw InvalidWeight("weight '" + std::string(text) + "' is out of range");
    }
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError("malformed weight '" + std::string(text) + "'");
    }
    if (!std::isfinite(weight) || weight < 0.0) {
      throw InvalidWeight("weight '" + std::string(text) + "' must be finite and non-negative");
    }
    record.weight = weight;
  }
  return record;
}

MultiLayerNetwork parse_edge_list(std::istream& in, const IngestOptions& options) {
  NetworkBuilder builder;
  for (const auto& label : options.node_manifest) {
    builder.add_node(label);
  }

  std::string buffer;
  std::size_t line_no = 0;
  while (std::getline(in, buffer)) {
    ++line_no;
    const auto line = strip_cr(buffer);
    try {
      if (line.starts_with(kLayerDecl)) {
        builder.add_layer(declared_label(line, kLayerDecl));
        continue;
      }
      if (line.starts_with(kNodeDecl)) {
        builder.add_node(declared_label(line, kNodeDecl));
        continue;
      }
      if (line.starts_with('#') || is_blank(line)) {
        continue;
      }
      const EdgeRecord record = parse_edge_record(line);
      if (record.source == record.target) {
        if (options.loops == LoopPolicy::skip) {
          continue;
        }
        throw LoopRejected("loop edge on node '" + record.source + "'");
      }
      const NodeId source = builder.add_node(record.source);
      const NodeId target = builder.add_node(record.target);
      const LayerId layer = builder.add_layer(record.layer);
      const auto existing = builder.edge_weight(source, target, layer);
      if (!existing) {
        builder.add_edge(source, target, layer, record.weight);
        continue;
      }
      switch (options.duplicates) {
        case DuplicatePolicy::error:
          builder.add_edge(source, target, layer, record.weight);  // throws DuplicateEdge
          break;
        case DuplicatePolicy::sum:
          builder.set_edge_weight(source, target, layer, *existing + record.weight);
          break;
        case DuplicatePolicy::max:
          builder.set_edge_weight(source, target, layer, std::max(*existing, record.weight));
          break;
        case DuplicatePolicy::first:
          break;
      }
    } catch (Error& e) {
      e.set_line(line_no);
      throw;
    }
  }
  if (in.bad()) {
    throw IoError("read failure after line " + std::to_string(line_no));
  }
  return std::move(builder).build();
}

MultiLayerNetwork read_edge_list(const std::filesystem::path& path,
                                 const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  return parse_edge_list(in, options);
}

std::string format_shortest(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

void write_edge_list(const MultiLayerNetwork& network, std::ostream& out,
                     std::span<const std::string> header) {
  out << "# source\ttarget\tlayer\tweight\n";
  for (const auto& line : header) {
    out << "# " << line << '\n';
  }
  for (const auto& label : network.layer_labels()) {
    out << kLayerDecl << label << '\n';
  }
  std::vector<bool> active(network.node_count(), false);
  for (const Edge& e : network.edges()) {
    active[e.source.value] = true;
    active[e.target.value] = true;
  }
  for (std::uint32_t i = 0; i < network.node_count(); ++i) {
    if (!active[i]) {
      out << kNodeDecl << network.node_label(NodeId{i}) << '\n';
    }
  }
  const auto nodes = network.node_labels();
  const auto layers = network.layer_labels();
  for (const Edge& e : network.edges()) {
    out << nodes[e.source.value] << '\t' << nodes[e.target.value] << '\t'
        << layers[e.layer.value] << '\t' << format_shortest(e.weight) << '\n';
  }
  if (!out) {
    throw IoError("write failure");
  }
}

void write_edge_list(const MultiLayerNetwork& network, const std::filesystem::path& path,
                     std::span<const std::string> header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  write_edge_list(network, out, header);
  out.flush();
  if (!out) {
    throw IoError("write failure on '" + path.string() + "'");
  }
}

std::vector<std::string> parse_node_manifest(std::istream& in) {
  std::vector<std::string> labels;
  std::string buffer;
  while (std::getline(in, buffer)) {
    const auto line = strip_cr(buffer);
    if (line.empty() || line.starts_with('#')) {
      continue;
    }
    labels.emplace_back(line);
  }
  return labels;
}

std::vector<std::string> read_node_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  return parse_node_manifest(in);
}

}  // namespace msn
