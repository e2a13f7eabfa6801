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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ks18/graph.hpp"
#include "ks18/rational.hpp"
#include "ks18/lp.hpp"
#include "ks18/sdp.hpp"

namespace ks18 {
namespace {

ExclusivityGraph petersen() {
    ExclusivityGraph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

TEST(Graph, BasicQueries) {
    const auto c5 = ExclusivityGraph::cycle(5);
    EXPECT_EQ(c5.size(), 5u);
    EXPECT_EQ(c5.edge_count(), 5u);
    EXPECT_TRUE(c5.adjacent(0, 4));
    EXPECT_FALSE(c5.adjacent(0, 2));
    EXPECT_EQ(c5.degree(3), 2u);
    EXPECT_EQ(c5.label(0), 1);
    EXPECT_EQ(c5.index_of(5), 4u);
    EXPECT_THROW(c5.index_of(6), std::out_of_range);
}

TEST(Graph, EdgesAreLexicographic) {
    const auto g = ExclusivityGraph::from_edges(4, {{2, 3}, {0, 2}, {1, 0}});
    const std::vector<std::pair<std::size_t, std::size_t>> expected = {{0, 1}, {0, 2}, {2, 3}};
    EXPECT_EQ(g.edges(), expected);
}

TEST(Graph, RejectsSelfLoopsAndRange) {
    ExclusivityGraph g(3);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
}

TEST(Graph, ComplementOfCompleteIsEmpty) {
    const auto k4 = ExclusivityGraph::complete(4);
    EXPECT_EQ(k4.edge_count(), 6u);
    EXPECT_EQ(k4.complement().edge_count(), 0u);
    // C5 is self-complementary in edge count.
    EXPECT_EQ(ExclusivityGraph::cycle(5).complement().edge_count(), 5u);
}

TEST(Graph, PermutationKeepsLabelsWithVertices) {
    const auto p3 = ExclusivityGraph::path(3);  // 1-2-3
    const auto q = p3.permuted({2, 0, 1});
    // Vertex with label 2 is still adjacent to labels 1 and 3.
    const std::size_t mid = q.index_of(2);
    EXPECT_EQ(q.degree(mid), 2u);
    EXPECT_EQ(q.edge_count(), 2u);
}

TEST(Graph, CliqueAndIndependence) {
    const auto c5 = ExclusivityGraph::cycle(5);
    EXPECT_TRUE(c5.is_clique(mask_of({0, 1})));
    EXPECT_FALSE(c5.is_clique(mask_of({0, 2})));
    EXPECT_TRUE(c5.is_independent(mask_of({0, 2})));
    EXPECT_EQ(mask_members(mask_of({4, 1})), (std::vector<std::size_t>{1, 4}));
}

TEST(Graph, ParseEdgeList) {
    const auto g = ExclusivityGraph::parse_edge_list("5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
    EXPECT_EQ(g, ExclusivityGraph::cycle(5));
    EXPECT_THROW(ExclusivityGraph::parse_edge_list("3\n1 4\n"), std::invalid_argument);
    EXPECT_THROW(ExclusivityGraph::parse_edge_list("x\n"), std::invalid_argument);
    EXPECT_THROW(ExclusivityGraph::parse_edge_list("3\n1\n"), std::invalid_argument);
}

TEST(Simplex, ExactTwoVariableOptimum) {
    // max x + y  s.t.  x + 2y <= 4,  3x + y <= 6  ->  (8/5, 6/5), value 14/5
    std::vector<std::vector<Rational>> a = {{1, 2}, {3, 1}};
    std::vector<Rational> b = {4, 6};
    std::vector<Rational> c = {1, 1};
    const auto sol = simplex_maximize<Rational>(a, b, c, Rational(0));
    EXPECT_EQ(sol.value, Rational(14, 5));
    EXPECT_EQ(sol.x[0], Rational(8, 5));
    EXPECT_EQ(sol.x[1], Rational(6, 5));
}

TEST(Simplex, DoubleMatchesExact) {
    std::vector<std::vector<double>> a = {{1, 2}, {3, 1}};
    const auto sol = simplex_maximize<double>(a, {4, 6}, {1, 1}, 1e-12);
    EXPECT_NEAR(sol.value, 2.8, 1e-12);
}

TEST(Simplex, Unbounded) {
    std::vector<std::vector<double>> a = {{1, -1}};
    EXPECT_THROW(simplex_maximize<double>(a, {1}, {1, 1}, 1e-12), std::runtime_error);
}

TEST(Sdp, FiveCycleIsSqrtFive) {
    const auto r = lovasz_theta_sdp(ExclusivityGraph::cycle(5));
    ASSERT_TRUE(r.converged);
    EXPECT_NEAR(r.value, std::sqrt(5.0), 1e-7);
}

TEST(Sdp, OddCycleFormula) {
    // theta(C_n) = n cos(pi/n) / (1 + cos(pi/n)) for odd n.
    for (std::size_t n : {7u, 9u}) {
        const double c = std::cos(std::numbers::pi / static_cast<double>(n));
        const auto r = lovasz_theta_sdp(ExclusivityGraph::cycle(n));
        ASSERT_TRUE(r.converged);
        EXPECT_NEAR(r.value, static_cast<double>(n) * c / (1.0 + c), 1e-7) << "n=" << n;
    }
}

TEST(Sdp, CompleteEmptyAndPetersen) {
    EXPECT_NEAR(lovasz_theta_sdp(ExclusivityGraph::complete(6)).value, 1.0, 1e-7);
    EXPECT_NEAR(lovasz_theta_sdp(ExclusivityGraph(6)).value, 6.0, 1e-7);
    EXPECT_NEAR(lovasz_theta_sdp(petersen()).value, 4.0, 1e-7);
}

TEST(Sdp, PrimalMatrixIsFeasible) {
    const auto g = ExclusivityGraph::cycle(5);
    const auto r = lovasz_theta_sdp(g);
    EXPECT_NEAR(r.x.trace(), 1.0, 1e-8);
    for (const auto &[u, v] : g.edges()) {
        EXPECT_NEAR(r.x(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)), 0.0, 1e-8);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r.x);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-8);
}

}  // namespace
}  // namespace ks18
