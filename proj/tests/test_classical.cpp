// Copyright 2026 The ks18 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>

#include "ks18/classical.hpp"
#include "ks18/invariants.hpp"
#include "ks18/ksets.hpp"

namespace ks18 {
namespace {

ExclusivityGraph ks_graph() { return orthogonality_graph(ks18_vectors()); }

TEST(ClassicalSigma, CountsYesAnswers) {
    const auto g = ks_graph();
    EXPECT_EQ(classical_sigma(g, Assignment{}), 0);
    const auto best = max_classical_sigma(g);
    Assignment a;
    for (int id : best.witness) {
        a.values[id] = 1;
    }
    EXPECT_EQ(classical_sigma(g, a), 4);
}

TEST(ClassicalSigma, NamesTheViolatedEdge) {
    Assignment a;
    a.values = {{1, 1}, {2, 1}};
    try {
        classical_sigma(ks_graph(), a);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("edge {1,2}"), std::string::npos) << e.what();
    }
}

TEST(ClassicalSigma, RejectsNonBinaryValues) {
    Assignment a;
    a.values = {{3, 2}};
    EXPECT_THROW(classical_sigma(ks_graph(), a), std::invalid_argument);
}

TEST(MaxClassical, KnownGraphs) {
    EXPECT_EQ(max_classical_sigma(ks_graph()).value, 4);
    EXPECT_EQ(max_classical_sigma(ExclusivityGraph::complete(4)).value, 1);
    EXPECT_EQ(max_classical_sigma(ExclusivityGraph(18)).value, 18);
}

class Strategy : public ::testing::Test {
   protected:
    void SetUp() override {
        graph = ks_graph();
        strategy = construct_box_strategy(graph);
    }
    ExclusivityGraph graph;
    BoxStrategy strategy;
};

TEST_F(Strategy, EighteenBalancedBoxes) {
    ASSERT_EQ(strategy.boxes.size(), 18u);
    ASSERT_EQ(strategy.tests.size(), 18u);
    for (const auto &[test, boxes] : strategy.tests) {
        EXPECT_EQ(boxes.size(), 4u) << "test " << test;
    }
    for (const auto &[box, tests] : strategy.dual()) {
        EXPECT_EQ(tests.size(), 4u) << "box " << box;
    }
}

TEST_F(Strategy, EveryPlacementGivesFour) {
    for (int b : strategy.boxes) {
        EXPECT_EQ(classical_sigma(graph, strategy.placement(b)), 4) << "box " << b;
    }
}

TEST_F(Strategy, ValidationPasses) {
    const auto r = validate_box_strategy(graph, strategy);
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.failures.empty());
    EXPECT_EQ(r.min_sigma, 4);
    EXPECT_EQ(r.max_sigma, 4);
    EXPECT_DOUBLE_EQ(r.average_sigma, 4.0);
    EXPECT_NEAR(r.yes_probability, 4.0 / 18.0, 1e-15);
}

TEST_F(Strategy, BoxesCoverTheComplement) {
    CliqueEdgeCover cover;
    for (const auto &[box, tests] : strategy.dual()) {
        VertexMask m = 0;
        for (int t : tests) {
            m |= bit(graph.index_of(t));
        }
        cover.cliques.push_back(m);
    }
    EXPECT_EQ(validate_cover(graph, cover), "");
    EXPECT_EQ(cover.cliques.size(), clique_edge_cover_complement(graph).cover.cliques.size());
}

TEST_F(Strategy, Deterministic) { EXPECT_EQ(construct_box_strategy(graph), strategy); }

TEST_F(Strategy, SharedBoxOnAnEdgeIsRejected) {
    auto bad = strategy;
    const int box = *bad.tests[2].begin();
    bad.tests[1].insert(box);
    const auto r = validate_box_strategy(graph, bad);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.exclusivity);
    EXPECT_FALSE(r.independence);
    bool named = false;
    for (const auto &f : r.failures) {
        named = named || f.find("tests 1 and 2") != std::string::npos;
    }
    EXPECT_TRUE(named);
}

TEST_F(Strategy, DroppedBoxBreaksBalance) {
    auto bad = strategy;
    bad.tests[5].erase(bad.tests[5].begin());
    const auto r = validate_box_strategy(graph, bad);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.balanced);
    EXPECT_EQ(r.test_sizes.at(5), 3u);
    EXPECT_EQ(r.min_sigma, 3);
    EXPECT_EQ(r.max_sigma, 4);
    EXPECT_TRUE(r.exclusivity);
    EXPECT_TRUE(r.independence);
}

TEST_F(Strategy, JsonRoundTrip) {
    const std::string text = strategy_to_json(strategy);
    EXPECT_EQ(strategy_from_json(text), strategy);
    EXPECT_EQ(strategy_to_json(strategy_from_json(text)), text);
}

TEST(StrategyJson, MalformedInput) {
    EXPECT_THROW(strategy_from_json("not json"), std::invalid_argument);
    EXPECT_THROW(strategy_from_json("{\"boxes\": [1]}"), std::invalid_argument);
    EXPECT_THROW(strategy_from_json("{\"boxes\": [1], \"tests\": [{\"id\": \"a\", \"boxes\": []}]}"),
                 std::invalid_argument);
    EXPECT_THROW(
        strategy_from_json("{\"boxes\": [1], \"tests\": [{\"id\": 1, \"boxes\": [1]}, {\"id\": 1, \"boxes\": [1]}]}"),
        std::invalid_argument);
}

TEST(StrategyValidation, MissingTestReported) {
    const auto g = ks_graph();
    auto s = construct_box_strategy(g);
    s.tests.erase(18);
    const auto r = validate_box_strategy(g, s);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.failures.front(), "missing test 18");
}

}  // namespace
}  // namespace ks18
