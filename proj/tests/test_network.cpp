#include <doctest.h>

#include <algorithm>

#include "msn/error.hpp"
#include "msn/network.hpp"
#include "support.hpp"

using namespace msn;
using msn::testing::labels;

namespace {

MultiLayerNetwork f3() {
  NetworkBuilder b;
  const auto a = b.add_node("a");
  const auto bb = b.add_node("b");
  const auto c = b.add_node("c");
  const auto l1 = b.add_layer("l1");
  const auto l2 = b.add_layer("l2");
  b.add_edge(a, bb, l1);
  b.add_edge(bb, a, l1);
  b.add_edge(a, c, l1);
  b.add_edge(a, bb, l2);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("add_node is idempotent") {
  NetworkBuilder b;
  const auto first = b.add_node("a");
  const auto again = b.add_node("a");
  CHECK(first == again);
  CHECK(b.node_count() == 1);
  const auto other = b.add_node("b");
  CHECK(other != first);
  CHECK(b.node_count() == 2);
}

TEST_CASE("add_node registers many labels densely") {
  NetworkBuilder b;
  for (int i = 0; i < 103112; ++i) {
    CHECK_EQ(b.add_node("user" + std::to_string(i)).value, static_cast<std::uint32_t>(i));
  }
  CHECK(b.node_count() == 103112);
}

TEST_CASE("add_edge enforces the structural constraints") {
  NetworkBuilder b;
  const auto a = b.add_node("a");
  const auto c = b.add_node("b");
  const auto l1 = b.add_layer("l1");

  CHECK_THROWS_AS(b.add_edge(a, a, l1, 1.0), LoopRejected);

  b.add_edge(a, c, l1, 1.0);
  CHECK_THROWS_AS(b.add_edge(a, c, l1, 1.0), DuplicateEdge);
  // Reverse direction is a different edge.
  CHECK_NOTHROW(b.add_edge(c, a, l1, 1.0));
  CHECK(b.edge_count() == 2);

  const auto l2 = b.add_layer("l2");
  CHECK_NOTHROW(b.add_edge(a, c, l2, 0.0));
  CHECK_THROWS_AS(b.add_edge(c, a, l2, -1.0), InvalidWeight);
  CHECK_THROWS_AS(b.add_edge(c, a, l2, std::numeric_limits<double>::infinity()), InvalidWeight);
  CHECK_THROWS_AS(b.add_edge(c, a, l2, std::numeric_limits<double>::quiet_NaN()), InvalidWeight);
  CHECK_THROWS_AS(b.add_edge(a, NodeId{7}, l2), UnknownNode);
  CHECK_THROWS_AS(b.add_edge(a, c, LayerId{9}), UnknownLayer);
  CHECK(b.edge_count() == 3);
}

TEST_CASE("counts on F3") {
  const auto net = f3();
  const auto c = net.counts();
  CHECK(c.nodes == 3);
  CHECK(c.layers == 2);
  CHECK(c.edges == 4);
  CHECK(c.edges_per_layer == std::vector<std::size_t>{3, 1});
}

TEST_CASE("counts on an empty network") {
  NetworkBuilder b;
  b.add_layer("l1");
  b.add_layer("l2");
  const auto net = std::move(b).build();
  const auto c = net.counts();
  CHECK(c.nodes == 0);
  CHECK(c.layers == 2);
  CHECK(c.edges == 0);
  CHECK(c.edges_per_layer == std::vector<std::size_t>{0, 0});
}

TEST_CASE("active nodes exclude isolated nodes") {
  CHECK(labels(f3(), f3().active_nodes()) == std::set<std::string>{"a", "b", "c"});

  NetworkBuilder b;
  const auto a = b.add_node("a");
  const auto c = b.add_node("b");
  b.add_node("d");
  b.add_edge(a, c, b.add_layer("l1"));
  const auto net = std::move(b).build();
  CHECK(net.node_count() == 3);
  CHECK(labels(net, net.active_nodes()) == std::set<std::string>{"a", "b"});
}

TEST_CASE("layer subnetwork") {
  const auto net = f3();
  const auto sub = net.layer_subnetwork(net.layer("l2"));
  CHECK(sub.node_count() == 3);
  CHECK(sub.layer_count() == 1);
  REQUIRE(sub.edge_count() == 1);
  const Edge e = sub.edges()[0];
  CHECK(sub.node_label(e.source) == "a");
  CHECK(sub.node_label(e.target) == "b");
  CHECK(sub.layer_label(e.layer) == "l2");

  const auto l1 = net.layer_subnetwork(net.layer("l1"));
  CHECK(l1.edge_count() == 3);

  CHECK_THROWS_AS(net.layer_subnetwork(LayerId{5}), UnknownLayer);

  NetworkBuilder b;
  b.add_node("a");
  b.add_node("b");
  b.add_layer("l1");
  const auto lonely = b.add_layer("l2");
  b.add_edge(NodeId{0}, NodeId{1}, LayerId{0});
  const auto empty_layer = std::move(b).build().layer_subnetwork(lonely);
  CHECK(empty_layer.node_count() == 2);
  CHECK(empty_layer.edge_count() == 0);
}

TEST_CASE("FIG1 layer l1 has the enumerated relationships plus the t-z and x-u links") {
  const auto net = msn::testing::load_fixture("fig1.tsv");
  const auto l1 = net.layer_subnetwork(net.layer("l1"));
  CHECK(l1.edge_count() == 10);
  CHECK(l1.edge_weight(l1.node("t"), l1.node("z"), l1.layer("l1")).has_value());
  CHECK(l1.edge_weight(l1.node("x"), l1.node("u"), l1.layer("l1")).has_value());
}

TEST_CASE("adjacency lists are sorted by neighbor then layer") {
  const auto raw = msn::testing::random_network(7);
  const auto net = msn::testing::to_network(raw);
  for (std::uint32_t i = 0; i < net.node_count(); ++i) {
    for (auto adj : {net.out_adjacency(NodeId{i}), net.in_adjacency(NodeId{i})}) {
      CHECK(std::is_sorted(adj.begin(), adj.end(), [](const Adjacent& a, const Adjacent& b) {
        return a.neighbor < b.neighbor || (a.neighbor == b.neighbor && a.layer < b.layer);
      }));
    }
  }
}

TEST_CASE("structural invariants hold on random networks") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto raw = msn::testing::random_network(seed);
    const auto net = msn::testing::to_network(raw);
    const auto c = net.counts();
    std::size_t sum = 0;
    for (auto n : c.edges_per_layer) {
      sum += n;
    }
    CHECK(sum == c.edges);
    CHECK(c.edges == raw.edges.size());

    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> seen;
    std::vector<bool> incident(net.node_count(), false);
    for (const Edge& e : net.edges()) {
      CHECK(e.source != e.target);
      CHECK(seen.insert({e.source.value, e.target.value, e.layer.value}).second);
      incident[e.source.value] = incident[e.target.value] = true;
    }
    const auto active = net.active_nodes();
    for (std::uint32_t i = 0; i < net.node_count(); ++i) {
      const bool listed = std::binary_search(active.begin(), active.end(), NodeId{i});
      CHECK(listed == incident[i]);
    }

    for (std::uint32_t l = 0; l < net.layer_count(); ++l) {
      const auto sub = net.layer_subnetwork(LayerId{l});
      CHECK(sub.node_count() == net.node_count());
      CHECK(sub.edge_count() == c.edges_per_layer[l]);
    }
  }
}

TEST_CASE("equality is label based") {
  NetworkBuilder b1;
  b1.add_node("a");
  b1.add_node("b");
  b1.add_edge(NodeId{0}, NodeId{1}, b1.add_layer("l"), 2.0);

  NetworkBuilder b2;
  b2.add_node("b");
  b2.add_node("a");
  b2.add_edge(NodeId{1}, NodeId{0}, b2.add_layer("l"), 2.0);

  NetworkBuilder b3;
  b3.add_node("b");
  b3.add_node("a");
  b3.add_edge(NodeId{1}, NodeId{0}, b3.add_layer("l"), 3.0);

  const auto n1 = std::move(b1).build();
  CHECK(n1 == std::move(b2).build());
  CHECK_FALSE(n1 == std::move(b3).build());
}
