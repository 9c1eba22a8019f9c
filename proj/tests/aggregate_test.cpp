#include <gtest/gtest.h>

#include <random>

#include "mlsp/aggregate.hpp"
#include "test_support.hpp"

namespace mlsp {
namespace {

using testing::kX;
using testing::kY;
using testing::kZ;

// x -> y on layers 1 and 2 with weights 0.8 and 0.5, nothing on layer 3.
MultiLayeredNetwork two_of_three(Polarity polarity = Polarity::kPositive) {
  NetworkBuilder b(3, polarity);
  b.add_edge({kX, kY, LayerId{0}, 0.8});
  b.add_edge({kX, kY, LayerId{1}, 0.5});
  b.add_node(kZ);
  return std::move(b).seal();
}

constexpr double kSeventeenThirtieths = 17.0 / 30.0;  // 1 - (0.8 + 0.5) / 3

TEST(Distance, HandEvaluation) {
  const auto net = two_of_three();
  EXPECT_NEAR(distance(net, kX, kY), kSeventeenThirtieths, 1e-15);
}

TEST(Distance, NoEdgesIsOne) {
  const auto net = two_of_three();
  EXPECT_EQ(distance(net, kY, kX), 1.0);
  EXPECT_EQ(distance(net, kX, kZ), 1.0);
}

TEST(Distance, AllOnesIsZero) {
  NetworkBuilder b(3);
  for (std::uint32_t l = 0; l < 3; ++l) b.add_edge({kX, kY, LayerId{l}, 1.0});
  const auto net = std::move(b).seal();
  EXPECT_EQ(distance(net, kX, kY), 0.0);
}

TEST(Distance, Errors) {
  const auto net = two_of_three();
  EXPECT_THROW((void)distance(net, kX, kX), Error);
  EXPECT_THROW((void)distance(net, kX, NodeId{77}), Error);
}

TEST(Distance, NegativePolaritySkipsSubtraction) {
  const auto net = two_of_three(Polarity::kNegative);
  EXPECT_NEAR(distance(net, kX, kY), 1.3 / 3.0, 1e-15);
}

TEST(MeLayers, Threshold) {
  const auto net = two_of_three();
  const auto edge = me_layers(net, kX, kY, 2);
  ASSERT_TRUE(edge.has_value());
  EXPECT_EQ(edge->layer_count, 2);
  EXPECT_NEAR(edge->distance, kSeventeenThirtieths, 1e-15);
  EXPECT_FALSE(me_layers(net, kX, kY, 3).has_value());
  EXPECT_THROW((void)me_layers(net, kX, kY, 0), Error);
}

TEST(MeLayers, FigureOnePairOnAllLayers) {
  const auto net = testing::figure_one_network();
  EXPECT_TRUE(me_layers(net, kX, kZ, 3).has_value());
}

TEST(MeDistance, Threshold) {
  const auto net = two_of_three();
  EXPECT_TRUE(me_distance(net, kX, kY, 0.6).has_value());
  EXPECT_FALSE(me_distance(net, kX, kY, 0.5).has_value());
  EXPECT_TRUE(me_distance(net, kX, kY, 1.0).has_value());
  EXPECT_THROW((void)me_distance(net, kX, kY, 1.5), Error);
  EXPECT_THROW((void)me_distance(net, kX, kY, -0.1), Error);
}

TEST(MeDistance, UnconnectedPairNeverQualifies) {
  const auto net = two_of_three();
  EXPECT_FALSE(me_distance(net, kY, kX, 1.0).has_value());
}

TEST(MeCombined, Conjunction) {
  const auto net = two_of_three();
  EXPECT_TRUE(me_combined(net, kX, kY, 2, 0.6).has_value());
  EXPECT_FALSE(me_combined(net, kX, kY, 3, 0.6).has_value());
  EXPECT_FALSE(me_combined(net, kX, kY, 2, 0.5).has_value());
}

TEST(AggregateGraph, VacuousThresholdsKeepEveryConnectedPair) {
  std::mt19937_64 rng(3);
  const auto raw = testing::random_raw(rng, 30, 3, 0.1);
  const auto net = testing::seal(raw);
  const auto graph = aggregate_graph(net, {1, 1.0, AggregationMode::kCombined});
  EXPECT_EQ(graph.edge_count(), net.pair_count());
  EXPECT_EQ(aggregate_graph(net, {4, 1.0, AggregationMode::kCombined}).edge_count(), 0u);
}

TEST(AggregateGraph, FigureOneAlphaThree) {
  const auto net = testing::figure_one_network();
  const auto graph = aggregate_graph(net, {3, 1.0, AggregationMode::kLayersOnly});
  const NodeIndex x = net.index_of(kX);
  std::vector<NodeId> targets;
  for (auto e = graph.edge_begin(x); e < graph.edge_end(x); ++e) {
    targets.push_back(net.id_of(graph.target(e)));
  }
  EXPECT_EQ(targets, (std::vector<NodeId>{kY, kZ}));
}

TEST(AggregateGraph, MatchesDefinitionOnRandomNetworks) {
  std::mt19937_64 rng(5);
  const std::vector<double> betas{0.0, 0.3, 0.5, 0.667, 0.875, 0.975, 1.0};
  for (int trial = 0; trial < 40; ++trial) {
    const auto raw = testing::random_raw(rng, 25, 3, 0.15);
    const auto net = testing::seal(raw);
    for (int alpha = 1; alpha <= 4; ++alpha) {
      for (double beta : betas) {
        const auto graph = aggregate_graph(net, {alpha, beta, AggregationMode::kCombined});
        const auto oracle = testing::oracle_adjacency(raw, alpha, beta);
        std::size_t expected = 0;
        for (std::size_t v = 0; v < raw.nodes; ++v) {
          expected += oracle[v].size();
          ASSERT_EQ(graph.out_degree(static_cast<NodeIndex>(v)), oracle[v].size());
          for (const auto& e : oracle[v]) {
            const auto idx = graph.find(static_cast<NodeIndex>(v), static_cast<NodeIndex>(e.dst));
            ASSERT_TRUE(idx.has_value());
            EXPECT_NEAR(graph.distance(*idx), e.distance, 1e-15);
            EXPECT_GE(graph.layer_count(*idx), alpha);
            EXPECT_LE(graph.distance(*idx), beta);
          }
        }
        EXPECT_EQ(graph.edge_count(), expected);
      }
    }
  }
}

TEST(AggregateGraph, ModeEquivalencesAndMonotoneFiltering) {
  std::mt19937_64 rng(8);
  const std::vector<double> betas{0.25, 0.5, 0.75, 1.0};
  for (int trial = 0; trial < 20; ++trial) {
    const auto net = testing::seal(testing::random_raw(rng, 20, 3, 0.2));
    auto edge_set = [&](const AggregationParams& p) {
      const auto g = aggregate_graph(net, p);
      std::vector<std::pair<NodeIndex, NodeIndex>> out;
      for (NodeIndex x = 0; x < g.node_count(); ++x) {
        for (auto e = g.edge_begin(x); e < g.edge_end(x); ++e) out.push_back({x, g.target(e)});
      }
      return out;
    };
    for (int alpha = 1; alpha <= 3; ++alpha) {
      EXPECT_EQ(edge_set({alpha, 1.0, AggregationMode::kCombined}),
                edge_set({alpha, 0.3, AggregationMode::kLayersOnly}));
      for (double beta : betas) {
        EXPECT_EQ(edge_set({1, beta, AggregationMode::kCombined}),
                  edge_set({3, beta, AggregationMode::kDistanceOnly}));
        const auto loose = edge_set({alpha, beta, AggregationMode::kCombined});
        const auto strict_alpha = edge_set({alpha + 1, beta, AggregationMode::kCombined});
        const auto strict_beta = edge_set({alpha, beta - 0.2, AggregationMode::kCombined});
        EXPECT_TRUE(std::includes(loose.begin(), loose.end(), strict_alpha.begin(), strict_alpha.end()));
        EXPECT_TRUE(std::includes(loose.begin(), loose.end(), strict_beta.begin(), strict_beta.end()));
      }
    }
    // Layers-only out-neighbours are exactly MN_out(x, alpha).
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const auto g = aggregate_graph(net, {alpha, 1.0, AggregationMode::kLayersOnly});
      for (NodeIndex x = 0; x < g.node_count(); ++x) {
        std::vector<NodeId> targets;
        for (auto e = g.edge_begin(x); e < g.edge_end(x); ++e) targets.push_back(net.id_of(g.target(e)));
        EXPECT_EQ(targets, net.multi_neighborhood_out(net.id_of(x), alpha));
      }
    }
  }
}

TEST(AggregateGraph, DistanceRangeInvariants) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto net = testing::seal(testing::random_raw(rng, 15, 1 + trial % 3, 0.3));
    for (std::size_t p = 0; p < net.pair_count(); ++p) {
      const double d = pair_distance(net, p);
      EXPECT_GE(d, 0.0);
      EXPECT_LT(d, 1.0 + 1e-15);
      bool all_ones = true;
      for (std::size_t l = 0; l < net.layer_count(); ++l) all_ones &= net.weight(p, l) == 1.0;
      EXPECT_EQ(d == 0.0, all_ones);
    }
  }
}

TEST(AggregationParams, Validation) {
  EXPECT_THROW((AggregationParams{0, 1.0}.validate()), Error);
  EXPECT_THROW((AggregationParams{1, 1.0001}.validate()), Error);
  EXPECT_THROW((AggregationParams{1, std::nan("")}.validate()), Error);
  EXPECT_NO_THROW((AggregationParams{5, 0.0}.validate()));
  EXPECT_EQ(parse_aggregation_mode("layers"), AggregationMode::kLayersOnly);
  EXPECT_THROW(parse_aggregation_mode("both"), std::invalid_argument);
}

}  // namespace
}  // namespace mlsp
