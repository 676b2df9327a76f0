// msn: command-line front end for multi-layer network analysis.
//
// Exit codes: 0 success, 1 I/O, 2 parse, 3 unknown node/layer, 4 alpha out of
// range, 5 degenerate network, 6 invalid generator config.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "msn/analytics.hpp"
#include "msn/centrality.hpp"
#include "msn/error.hpp"
#include "msn/generator.hpp"
#include "msn/io.hpp"
#include "msn/neighborhood.hpp"
#include "msn/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kThreadsEnv = "MSN_THREADS";

enum ExitCode : int {
  kOk = 0,
  kIo = 1,
  kParse = 2,
  kUnknownEntity = 3,
  kAlphaRange = 4,
  kDegenerate = 5,
  kBadConfig = 6,
};

struct InputOptions {
  std::string path;
  std::string nodes_file;
  std::string duplicates = "error";
  std::string loops = "error";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "Edge-list file (tab separated)")->required();
  cmd->add_option("--nodes-file", in.nodes_file, "Node manifest, one label per line");
  cmd->add_option("--duplicates", in.duplicates, "Duplicate edge policy")
      ->check(CLI::IsMember({"error", "sum", "max", "first"}));
  cmd->add_option("--loops", in.loops, "Loop edge policy")->check(CLI::IsMember({"error", "skip"}));
}

msn::MultiLayerNetwork load(const InputOptions& in) {
  msn::IngestOptions options;
  options.duplicates = *msn::parse_duplicate_policy(in.duplicates);
  options.loops = *msn::parse_loop_policy(in.loops);
  if (!in.nodes_file.empty()) {
    options.node_manifest = msn::read_node_manifest(in.nodes_file);
  }
  return msn::read_edge_list(in.path, options);
}

unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      const int n = std::stoi(env);
      if (n > 0) {
        return static_cast<unsigned>(n);
      }
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// 6 significant digits for human-readable output.
std::string sig6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string pct1(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw msn::IoError("cannot open '" + path.string() + "' for writing");
  }
  return out;
}

void close_output(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) {
    throw msn::IoError("write failure on '" + path.string() + "'");
  }
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
  auto out = open_output(path);
  writer(out);
  close_output(out, path);
}

std::size_t peak_rss_bytes() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<std::size_t>(usage.ru_maxrss) * 1024;  // Linux reports KiB
}

/// Machine-readable record of one successful run.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::vector<std::string> inputs;
  json flags = json::object();
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void write(const fs::path& path) const {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const json doc{{"tool", "msn"},
                   {"version", kVersion},
                   {"command", command},
                   {"argv", argv},
                   {"inputs", inputs},
                   {"flags", flags},
                   {"outputs", outputs},
                   {"wall_seconds", seconds},
                   {"peak_rss_bytes", peak_rss_bytes()}};
    write_file(path, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
  }
};

void record_flags(const CLI::App* cmd, RunManifest& manifest) {
  for (const CLI::Option* opt : cmd->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") {
      continue;
    }
    const auto& results = opt->results();
    std::string name = opt->get_name();
    if (results.empty()) {
      manifest.flags[name] = true;
    } else if (results.size() == 1) {
      manifest.flags[name] = results.front();
    } else {
      manifest.flags[name] = results;
    }
  }
}

fs::path manifest_path(const std::string& explicit_path, const fs::path& out, bool out_is_dir) {
  if (!explicit_path.empty()) {
    return explicit_path;
  }
  if (out.empty()) {
    return {};
  }
  return out_is_dir ? out / "manifest.json" : fs::path(out.string() + ".manifest.json");
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

struct StatsArgs {
  InputOptions input;
  std::string out;
  std::string manifest;
};

int run_stats(const StatsArgs& args, RunManifest& manifest) {
  const auto net = load(args.input);
  const auto table = msn::layer_stats(net);
  std::cout << "nodes\t" << table.nodes << '\n'
            << "layers\t" << net.layer_count() << '\n'
            << "edges\t" << table.total_edges << '\n'
            << "active_nodes\t" << table.distinct_active << '\n'
            << '\n'
            << "layer\tedges\tactive_nodes\n";
  for (const auto& row : table.rows) {
    std::cout << row.layer << '\t' << row.edges << '\t' << row.active_nodes << '\n';
  }
  std::cout << "SUM\t" << table.total_edges << '\t' << table.total_layer_active << '\n';

  if (!args.out.empty()) {
    const fs::path out = args.out;
    write_file(out, [&](std::ostream& os) {
      if (out.extension() == ".json") {
        os << msn::to_json(table).dump(2) << '\n';
      } else {
        msn::write_csv(os, table);
      }
    });
    manifest.outputs.push_back(out.string());
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// neighborhood
// ---------------------------------------------------------------------------

struct NeighborhoodArgs {
  InputOptions input;
  std::string node;
  std::string layer;
  std::optional<int> alpha;
  std::string manifest;
};

int run_neighborhood(const NeighborhoodArgs& args, RunManifest&) {
  const auto net = load(args.input);
  const auto x = net.node(args.node);
  const auto set = args.alpha ? msn::multi_layer_neighborhood(net, x, *args.alpha)
                              : msn::local_neighborhood(net, x, net.layer(args.layer));
  std::vector<std::string> members;
  members.reserve(set.members.size());
  for (auto y : set.members) {
    members.push_back(net.node_label(y));
  }
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::cout << (i ? " " : "") << members[i];
  }
  std::cout << '\n' << "count " << members.size() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// centrality
// ---------------------------------------------------------------------------

struct CentralityArgs {
  InputOptions input;
  int alpha = 1;
  std::string variant = "total";
  std::string node;
  bool all = false;
  std::string out;
  unsigned threads = 1;
  std::string manifest;
};

int run_centrality(const CentralityArgs& args, RunManifest& manifest) {
  const auto net = load(args.input);
  const auto variant = *msn::parse_variant(args.variant);
  if (!args.node.empty()) {
    const auto x = net.node(args.node);
    std::cout << sig6(msn::cldc(net, x, args.alpha, variant)) << '\n';
    return kOk;
  }
  const auto scores = msn::cldc_batch(net, args.alpha, variant, args.threads);
  const auto ranked = msn::ranked_scores(net, scores);
  for (const auto& [node, score] : ranked) {
    std::cout << net.node_label(node) << '\t' << sig6(score) << '\n';
  }
  if (!args.out.empty()) {
    write_file(args.out, [&](std::ostream& os) { msn::write_scores_csv(os, net, ranked); });
    manifest.outputs.push_back(args.out);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// distribution
// ---------------------------------------------------------------------------

struct DistributionArgs {
  InputOptions input;
  std::string alphas;
  std::string kind = "mn";
  std::string variant = "total";
  bool histogram = false;
  bool occupancy = false;
  bool fit = false;
  std::size_t top = 10;
  std::string out;
  unsigned threads = 1;
  std::string manifest;
};

void print_fit(int alpha, const msn::RankDistribution& dist) {
  const auto fit = msn::fit_rank_size(dist);
  std::cout << "fit alpha=" << alpha << " slope=" << sig6(fit.slope)
            << " r2=" << sig6(fit.r_squared) << " points=" << fit.points << '\n';
}

int run_distribution(const DistributionArgs& args, RunManifest& manifest) {
  const auto net = load(args.input);
  const auto alphas = msn::parse_alpha_list(args.alphas);
  for (int a : alphas) {
    msn::check_alpha(net, a);
  }
  const auto variant = *msn::parse_variant(args.variant);
  const fs::path dir = args.out;
  auto emit = [&](const std::string& name, auto&& writer) {
    if (dir.empty()) {
      return;
    }
    const auto path = dir / name;
    write_file(path, writer);
    manifest.outputs.push_back(path.string());
  };

  if (args.kind == "mn") {
    for (int a : alphas) {
      const auto dist = msn::mn_size_distribution(net, a);
      std::cout << "mn alpha=" << a << " nonempty=" << dist.entries.size() << '\n';
      for (std::size_t i = 0; i < std::min(args.top, dist.entries.size()); ++i) {
        const auto& e = dist.entries[i];
        std::cout << "  " << i + 1 << '\t' << net.node_label(e.node) << '\t' << sig6(e.value)
                  << '\n';
      }
      if (args.fit) {
        print_fit(a, dist);
      }
      emit("mn_rank_a" + std::to_string(a) + ".csv",
           [&](std::ostream& os) { msn::write_csv(os, net, dist); });
    }
  } else {
    const auto sweep = msn::cldc_sweep(net, alphas, args.threads);
    const auto summary = msn::summary_from_sweep(sweep, variant);
    std::cout << "cldc variant=" << msn::variant_name(variant) << '\n'
              << "alpha,min,max,count\n";
    for (const auto& row : summary.rows) {
      std::cout << row.alpha << ',' << sig6(row.min) << ',' << sig6(row.max) << ',' << row.count
                << '\n';
    }
    const std::string prefix = "cldc_" + std::string(msn::variant_name(variant));
    emit(prefix + "_summary.csv", [&](std::ostream& os) { msn::write_csv(os, summary); });
    for (const auto& slice : sweep.slices) {
      auto dist = msn::rank_distribution(slice.scores(variant));
      dist.alpha = slice.alpha;
      dist.variant = variant;
      if (args.fit) {
        print_fit(slice.alpha, dist);
      }
      emit(prefix + "_rank_a" + std::to_string(slice.alpha) + ".csv",
           [&](std::ostream& os) { msn::write_csv(os, net, dist); });
    }
  }

  if (args.histogram) {
    for (int a : alphas) {
      const auto hist = msn::mn_histogram(net, a);
      std::cout << "histogram alpha=" << a << '\n' << "bucket_lo,bucket_hi,count\n";
      for (const auto& b : hist.buckets) {
        if (b.count > 0) {
          std::cout << b.lo << ',' << b.hi << ',' << b.count << '\n';
        }
      }
      emit("mn_hist_a" + std::to_string(a) + ".csv",
           [&](std::ostream& os) { msn::write_csv(os, hist); });
    }
  }

  if (args.occupancy) {
    const auto report = msn::mn_occupancy(net, alphas);
    std::cout << "alpha,nonempty,empty,pct_nonempty\n";
    for (const auto& row : report.rows) {
      std::cout << row.alpha << ',' << row.nonempty << ',' << row.empty << ','
                << pct1(row.pct_nonempty) << '\n';
    }
    emit("occupancy.csv", [&](std::ostream& os) { msn::write_csv(os, report); });
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string config_file;
  std::size_t nodes = 1000;
  std::size_t layers = 1;
  std::optional<std::size_t> edges_per_layer;
  std::size_t seed_clique = 3;
  double overlap = 0.3;
  std::uint64_t seed = 42;
  std::string weights = "constant";
  double weight = 1.0;
  std::string out;
  std::string manifest;
};

int run_generate(const GenerateArgs& args, const CLI::App* cmd, RunManifest& manifest) {
  msn::GeneratorConfig config;
  config.overlap = 0.3;
  if (!args.config_file.empty()) {
    std::ifstream in(args.config_file);
    if (!in) {
      throw msn::IoError("cannot open '" + args.config_file + "'");
    }
    msn::read_config(in, config);
    manifest.inputs.push_back(args.config_file);
  }
  // Flags given on the command line override the config file.
  auto given = [&](const char* name) { return cmd->count(name) > 0 || args.config_file.empty(); };
  if (given("--nodes")) config.nodes = args.nodes;
  if (given("--layers")) config.layers = args.layers;
  if (given("--seed-clique")) config.seed_clique = args.seed_clique;
  if (given("--overlap")) config.overlap = args.overlap;
  if (given("--seed")) config.seed = args.seed;
  if (given("--weights")) msn::apply_config_entry(config, "weights", args.weights);
  if (given("--weight")) config.weight = args.weight;
  if (args.edges_per_layer) {
    config.edges_per_layer = *args.edges_per_layer;
  } else if (args.config_file.empty()) {
    config.edges_per_layer = 5 * config.nodes;
  }
  config.validate();

  const auto net = msn::generate(config);
  const auto header = msn::describe(config);
  msn::write_edge_list(net, fs::path(args.out), header);
  manifest.outputs.push_back(args.out);
  manifest.flags["resolved_config"] = header[1];

  const auto counts = net.counts();
  std::cout << "generated " << counts.nodes << " nodes, " << counts.layers << " layers, "
            << counts.edges << " edges -> " << args.out << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-layer social network analytics: neighborhoods, cross-layer degree "
               "centrality and distributions"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  const unsigned env_threads = default_threads();

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Per-layer edge and active-node counts");
  add_input_options(stats_cmd, stats.input);
  stats_cmd->add_option("--out", stats.out, "Write table to CSV (or JSON for *.json)");
  stats_cmd->add_option("--manifest", stats.manifest, "Run manifest path");

  NeighborhoodArgs nb;
  auto* nb_cmd = app.add_subcommand("neighborhood", "Local or multi-layer neighborhood of a node");
  add_input_options(nb_cmd, nb.input);
  nb_cmd->add_option("--node", nb.node, "Node label")->required();
  auto* layer_opt = nb_cmd->add_option("--layer", nb.layer, "Layer label (local neighborhood)");
  auto* alpha_opt = nb_cmd->add_option("--alpha", nb.alpha, "Minimum shared layers");
  layer_opt->excludes(alpha_opt);
  alpha_opt->excludes(layer_opt);
  nb_cmd->add_option("--manifest", nb.manifest, "Run manifest path");

  CentralityArgs ce;
  ce.threads = env_threads;
  auto* ce_cmd = app.add_subcommand("centrality", "Cross-layer degree centrality");
  add_input_options(ce_cmd, ce.input);
  ce_cmd->add_option("--alpha", ce.alpha, "Minimum shared layers")->required();
  ce_cmd->add_option("--variant", ce.variant, "total, in or out")
      ->check(CLI::IsMember({"total", "in", "out"}));
  auto* node_opt = ce_cmd->add_option("--node", ce.node, "Score a single node");
  auto* all_opt = ce_cmd->add_flag("--all", ce.all, "Score every node (default)");
  node_opt->excludes(all_opt);
  all_opt->excludes(node_opt);
  ce_cmd->add_option("--out", ce.out, "CSV node,score");
  ce_cmd->add_option("--threads", ce.threads, "Worker threads (default $MSN_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  ce_cmd->add_option("--manifest", ce.manifest, "Run manifest path");

  DistributionArgs di;
  di.threads = env_threads;
  auto* di_cmd = app.add_subcommand("distribution", "Rank distributions, histograms, occupancy");
  add_input_options(di_cmd, di.input);
  di_cmd->add_option("--alpha", di.alphas, "Alpha list, e.g. 1,2 or 1-10")->required();
  di_cmd->add_option("--kind", di.kind, "mn or cldc")->check(CLI::IsMember({"mn", "cldc"}));
  di_cmd->add_option("--variant", di.variant, "CLDC variant")
      ->check(CLI::IsMember({"total", "in", "out"}));
  di_cmd->add_flag("--histogram", di.histogram, "Three-tier MN size histogram");
  di_cmd->add_flag("--occupancy", di.occupancy, "Empty / non-empty MN counts");
  di_cmd->add_flag("--fit", di.fit, "Log-log rank-size slope and R^2");
  di_cmd->add_option("--top", di.top, "Rank rows printed per alpha");
  di_cmd->add_option("--out", di.out, "Output directory for CSV files");
  di_cmd->add_option("--threads", di.threads, "Worker threads (default $MSN_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  di_cmd->add_option("--manifest", di.manifest, "Run manifest path");

  GenerateArgs ge;
  auto* ge_cmd = app.add_subcommand("generate", "Synthetic multi-layer network");
  ge_cmd->add_option("--config", ge.config_file, "key=value config file");
  ge_cmd->add_option("--nodes", ge.nodes, "Node count");
  ge_cmd->add_option("--layers", ge.layers, "Layer count");
  ge_cmd->add_option("--edges-per-layer", ge.edges_per_layer, "Edge budget per layer (5 x nodes)");
  ge_cmd->add_option("--seed-clique", ge.seed_clique, "Seed clique size");
  ge_cmd->add_option("--overlap", ge.overlap, "Probability of copying a pair from another layer");
  ge_cmd->add_option("--seed", ge.seed, "RNG seed (mt19937_64)");
  ge_cmd->add_option("--weights", ge.weights, "constant or exponential");
  ge_cmd->add_option("--weight", ge.weight, "Constant weight or exponential mean");
  ge_cmd->add_option("--out", ge.out, "Edge-list output path")->required();
  ge_cmd->add_option("--manifest", ge.manifest, "Run manifest path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; usage errors count as parse errors
    return app.exit(e) == 0 ? kOk : kParse;
  }

  RunManifest manifest;
  manifest.argv.assign(argv, argv + argc);
  try {
    int code = kOk;
    fs::path manifest_out;
    if (stats_cmd->parsed()) {
      manifest.command = "stats";
      manifest.inputs.push_back(stats.input.path);
      code = run_stats(stats, manifest);
      record_flags(stats_cmd, manifest);
      manifest_out = manifest_path(stats.manifest, stats.out, false);
    } else if (nb_cmd->parsed()) {
      if (nb.layer.empty() && !nb.alpha) {
        std::cerr << "msn: error: one of --layer or --alpha is required\n";
        return static_cast<int>(CLI::ExitCodes::RequiredError);
      }
      manifest.command = "neighborhood";
      manifest.inputs.push_back(nb.input.path);
      code = run_neighborhood(nb, manifest);
      record_flags(nb_cmd, manifest);
      manifest_out = manifest_path(nb.manifest, {}, false);
    } else if (ce_cmd->parsed()) {
      manifest.command = "centrality";
      manifest.inputs.push_back(ce.input.path);
      code = run_centrality(ce, manifest);
      record_flags(ce_cmd, manifest);
      manifest_out = manifest_path(ce.manifest, ce.out, false);
    } else if (di_cmd->parsed()) {
      manifest.command = "distribution";
      manifest.inputs.push_back(di.input.path);
      code = run_distribution(di, manifest);
      record_flags(di_cmd, manifest);
      manifest_out = manifest_path(di.manifest, di.out, true);
    } else if (ge_cmd->parsed()) {
      manifest.command = "generate";
      record_flags(ge_cmd, manifest);
      code = run_generate(ge, ge_cmd, manifest);
      manifest_out = manifest_path(ge.manifest, ge.out, false);
    }
    if (code == kOk && !manifest_out.empty()) {
      manifest.outputs.push_back(manifest_out.string());
      manifest.write(manifest_out);
    }
    std::cout.flush();
    return code;
  } catch (const msn::IoError& e) {
    std::cerr << "msn: I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const msn::ParseError& e) {
    std::cerr << "msn: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const msn::LoopRejected& e) {
    std::cerr << "msn: loop rejected: " << e.what() << '\n';
    return kParse;
  } catch (const msn::DuplicateEdge& e) {
    std::cerr << "msn: duplicate edge: " << e.what() << '\n';
    return kParse;
  } catch (const msn::InvalidWeight& e) {
    std::cerr << "msn: invalid weight: " << e.what() << '\n';
    return kParse;
  } catch (const msn::UnknownNode& e) {
    std::cerr << "msn: " << e.what() << '\n';
    return kUnknownEntity;
  } catch (const msn::UnknownLayer& e) {
    std::cerr << "msn: " << e.what() << '\n';
    return kUnknownEntity;
  } catch (const msn::AlphaOutOfRange& e) {
    std::cerr << "msn: " << e.what() << '\n';
    return kAlphaRange;
  } catch (const msn::DegenerateNetwork& e) {
    std::cerr << "msn: " << e.what() << '\n';
    return kDegenerate;
  } catch (const msn::ConfigInvalid& e) {
    std::cerr << "msn: invalid config: " << e.what() << '\n';
    return kBadConfig;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "msn: I/O error: " << e.what() << '\n';
    return kIo;
  }
}
