#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "msn/network.hpp"

namespace msn {

// Cross-layer degree centrality (CLDC)
// ------------------------------------
// For a node x and threshold alpha, let MN(x, alpha) be the nodes adjacent to
// x on at least alpha layers. Then
//
//   CLDC_out(x, a) = sum_{y in MN(x,a)} sum_l w(x, y, l) / ((m - 1) |L|)
//   CLDC_in(x, a)  = sum_{y in MN(x,a)} sum_l w(y, x, l) / ((m - 1) |L|)
//   CLDC(x, a)     = (out numerator + in numerator)      / ((m - 1) |L|)
//
// The inner sums run over every layer carrying an edge between x and a
// qualifying y, not only alpha of them. m counts isolated nodes too.
//
// Accumulation order is fixed (neighbors ascending, layers ascending within
// a neighbor, per-neighbor subtotal added to the running sum), and the single
// node, batch and sweep paths share it, so all of them agree bit for bit.

enum class Variant { total, in, out };

std::optional<Variant> parse_variant(std::string_view name);
std::string_view variant_name(Variant variant);

struct CentralityScore {
  NodeId node;
  int alpha = 1;
  Variant variant = Variant::total;
  double value = 0.0;
};

/// Throws DegenerateNetwork when m < 2.
double cldc_denominator(const MultiLayerNetwork& net);

double cldc(const MultiLayerNetwork& net, NodeId x, int alpha);
double cldc_in(const MultiLayerNetwork& net, NodeId x, int alpha);
double cldc_out(const MultiLayerNetwork& net, NodeId x, int alpha);
double cldc(const MultiLayerNetwork& net, NodeId x, int alpha, Variant variant);

/// One score per node (index order), zeros included. Identical to calling the
/// per-node function for every node, for any thread count.
std::vector<double> cldc_batch(const MultiLayerNetwork& net, int alpha, Variant variant,
                               unsigned threads = 1);

/// All three variants and |MN(x, alpha)| for several alphas in one pass over
/// the adjacency lists.
struct AlphaSweep {
  struct Slice {
    int alpha = 1;
    std::vector<double> total;
    std::vector<double> in;
    std::vector<double> out;
    std::vector<std::uint32_t> mn_size;

    const std::vector<double>& scores(Variant variant) const;
  };
  std::vector<Slice> slices;
};

AlphaSweep cldc_sweep(const MultiLayerNetwork& net, std::span<const int> alphas,
                      unsigned threads = 1);

}  // namespace msn
