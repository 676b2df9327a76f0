#pragma once

#include <iosfwd>
#include <span>
#include <utility>

#include <json.hpp>

#include "msn/analytics.hpp"
#include "msn/network.hpp"

namespace msn {

// CSV layouts (header line first, values at full round-trip precision):
//   rank distribution   rank,node,value
//   histogram           bucket_lo,bucket_hi,count
//   occupancy           alpha,nonempty,empty,pct_nonempty
//   centrality summary  alpha,min,max,count
//   layer stats         layer,edges,active_nodes  (closing SUM row)
//   node scores         node,score
// The JSON forms carry the same field names.

void write_csv(std::ostream& out, const MultiLayerNetwork& net, const RankDistribution& dist);
void write_csv(std::ostream& out, const HistogramReport& report);
void write_csv(std::ostream& out, const OccupancyReport& report);
void write_csv(std::ostream& out, const CldcSummary& summary);
void write_csv(std::ostream& out, const LayerStatsTable& table);

nlohmann::json to_json(const MultiLayerNetwork& net, const RankDistribution& dist);
nlohmann::json to_json(const HistogramReport& report);
nlohmann::json to_json(const OccupancyReport& report);
nlohmann::json to_json(const CldcSummary& summary);
nlohmann::json to_json(const LayerStatsTable& table);

/// (node, score) pairs sorted by descending score, then ascending node label.
std::vector<std::pair<NodeId, double>> ranked_scores(const MultiLayerNetwork& net,
                                                     std::span<const double> scores);
void write_scores_csv(std::ostream& out, const MultiLayerNetwork& net,
                      std::span<const std::pair<NodeId, double>> ranked);

}  // namespace msn
