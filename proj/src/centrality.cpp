#include "msn/centrality.hpp"

#include <algorithm>

#include "msn/error.hpp"
#include "msn/neighborhood.hpp"
#include "msn/parallel.hpp"

namespace msn {

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "total") return Variant::total;
  if (name == "in") return Variant::in;
  if (name == "out") return Variant::out;
  return std::nullopt;
}

std::string_view variant_name(Variant variant) {
  switch (variant) {
    case Variant::total:
      return "total";
    case Variant::in:
      return "in";
    case Variant::out:
      return "out";
  }
  return "total";
}

const std::vector<double>& AlphaSweep::Slice::scores(Variant variant) const {
  switch (variant) {
    case Variant::in:
      return in;
    case Variant::out:
      return out;
    case Variant::total:
      break;
  }
  return total;
}

double cldc_denominator(const MultiLayerNetwork& net) {
  if (net.node_count() < 2) {
    throw DegenerateNetwork("centrality needs at least 2 nodes, network has " +
                            std::to_string(net.node_count()));
  }
  return static_cast<double>(net.node_count() - 1) * static_cast<double>(net.layer_count());
}

namespace {

struct Numerators {
  double out = 0.0;
  double in = 0.0;
};

Numerators numerators(const MultiLayerNetwork& net, NodeId x, std::uint32_t alpha) {
  Numerators n;
  for_each_neighbor(net, x, [&](const NeighborGroup& g) {
    if (g.support >= alpha) {
      n.out += g.out_weight;
      n.in += g.in_weight;
    }
  });
  return n;
}

double score(const Numerators& n, Variant variant, double denominator) {
  switch (variant) {
    case Variant::in:
      return n.in / denominator;
    case Variant::out:
      return n.out / denominator;
    case Variant::total:
      break;
  }
  return (n.out + n.in) / denominator;
}

}  // namespace

double cldc(const MultiLayerNetwork& net, NodeId x, int alpha, Variant variant) {
  net.check_node(x);
  check_alpha(net, alpha);
  const double denominator = cldc_denominator(net);
  return score(numerators(net, x, static_cast<std::uint32_t>(alpha)), variant, denominator);
}

double cldc(const MultiLayerNetwork& net, NodeId x, int alpha) {
  return cldc(net, x, alpha, Variant::total);
}

double cldc_in(const MultiLayerNetwork& net, NodeId x, int alpha) {
  return cldc(net, x, alpha, Variant::in);
}

double cldc_out(const MultiLayerNetwork& net, NodeId x, int alpha) {
  return cldc(net, x, alpha, Variant::out);
}

std::vector<double> cldc_batch(const MultiLayerNetwork& net, int alpha, Variant variant,
                               unsigned threads) {
  check_alpha(net, alpha);
  const double denominator = cldc_denominator(net);
  std::vector<double> scores(net.node_count(), 0.0);
  parallel_chunks(net.node_count(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const NodeId x{static_cast<std::uint32_t>(i)};
      scores[i] = score(numerators(net, x, static_cast<std::uint32_t>(alpha)), variant,
                        denominator);
    }
  });
  return scores;
}

AlphaSweep cldc_sweep(const MultiLayerNetwork& net, std::span<const int> alphas,
                      unsigned threads) {
  for (int a : alphas) {
    check_alpha(net, a);
  }
  const double denominator = cldc_denominator(net);
  const std::size_t m = net.node_count();
  const std::size_t num_layers = net.layer_count();

  AlphaSweep sweep;
  sweep.slices.resize(alphas.size());
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    auto& s = sweep.slices[k];
    s.alpha = alphas[k];
    s.total.assign(m, 0.0);
    s.in.assign(m, 0.0);
    s.out.assign(m, 0.0);
    s.mn_size.assign(m, 0);
  }

  parallel_chunks(m, threads, [&](std::size_t begin, std::size_t end) {
    // Accumulators indexed by alpha; slot a collects neighbors with support >= a.
    std::vector<Numerators> acc(num_layers + 1);
    std::vector<std::uint32_t> size(num_layers + 1);
    for (std::size_t i = begin; i < end; ++i) {
      std::fill(acc.begin(), acc.end(), Numerators{});
      std::fill(size.begin(), size.end(), 0u);
      const NodeId x{static_cast<std::uint32_t>(i)};
      for_each_neighbor(net, x, [&](const NeighborGroup& g) {
        const std::size_t top = std::min<std::size_t>(g.support, num_layers);
        for (std::size_t a = 1; a <= top; ++a) {
          acc[a].out += g.out_weight;
          acc[a].in += g.in_weight;
          ++size[a];
        }
      });
      for (auto& s : sweep.slices) {
        const auto& n = acc[static_cast<std::size_t>(s.alpha)];
        s.total[i] = score(n, Variant::total, denominator);
        s.in[i] = score(n, Variant::in, denominator);
        s.out[i] = score(n, Variant::out, denominator);
        s.mn_size[i] = size[static_cast<std::size_t>(s.alpha)];
      }
    }
  });
  return sweep;
}

}  // namespace msn
