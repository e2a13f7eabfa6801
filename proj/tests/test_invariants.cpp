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

#include <bit>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "ks18/invariants.hpp"
#include "ks18/ksets.hpp"

namespace ks18 {
namespace {

std::size_t brute_force_alpha(const ExclusivityGraph &g) {
    std::size_t best = 0;
    for (VertexMask m = 0; m < (VertexMask{1} << g.size()); ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) > best && g.is_independent(m)) {
            best = static_cast<std::size_t>(std::popcount(m));
        }
    }
    return best;
}

ExclusivityGraph ks_graph() { return orthogonality_graph(ks18_vectors()); }

TEST(Independence, KsGraphIsFour) {
    const auto g = ks_graph();
    const auto r = independence_number(g);
    EXPECT_EQ(r.alpha, 4u);
    EXPECT_EQ(brute_force_alpha(g), 4u);
    EXPECT_EQ(r.witness.size(), 4u);
    EXPECT_TRUE(g.is_independent(mask_of(r.witness)));
}

TEST(Independence, SmallGraphs) {
    EXPECT_EQ(independence_number(ExclusivityGraph::cycle(5)).alpha, 2u);
    EXPECT_EQ(independence_number(ExclusivityGraph::complete(4)).alpha, 1u);
    EXPECT_EQ(independence_number(ExclusivityGraph(18)).alpha, 18u);
    EXPECT_EQ(independence_number(ExclusivityGraph::path(7)).alpha, 4u);
}

TEST(Independence, MatchesExhaustiveSearchOnRandomGraphs) {
    std::mt19937_64 rng(3);
    std::bernoulli_distribution edge(0.35);
    for (int trial = 0; trial < 20; ++trial) {
        ExclusivityGraph g(14);
        for (std::size_t a = 0; a < 14; ++a)
            for (std::size_t b = a + 1; b < 14; ++b)
                if (edge(rng)) g.add_edge(a, b);
        EXPECT_EQ(independence_number(g).alpha, brute_force_alpha(g)) << "trial " << trial;
    }
}

TEST(Independence, SizeLimit) {
    EXPECT_THROW(independence_number(ExclusivityGraph(41)), std::invalid_argument);
}

TEST(MaximalCliques, KsGraphHasTheNineBasesAsFourCliques) {
    const auto g = ks_graph();
    const auto cliques = maximal_cliques(g);
    std::size_t fours = 0;
    for (VertexMask c : cliques) {
        EXPECT_TRUE(g.is_clique(c));
        // maximal: no vertex outside extends it
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (!((c >> v) & 1U)) {
                EXPECT_FALSE(g.is_clique(c | bit(v)));
            }
        }
        fours += std::popcount(c) == 4 ? 1 : 0;
    }
    EXPECT_EQ(fours, 9u);
    EXPECT_EQ(std::popcount(cliques.front()), 4);
}

TEST(FractionalPacking, KsGraphIsNineHalves) {
    const auto g = ks_graph();
    const auto r = fractional_packing(g);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.exact_value, Rational(9, 2));
    EXPECT_DOUBLE_EQ(r.value, 4.5);
    EXPECT_LE(packing_violation(g, r.weights), 1e-12);
}

TEST(FractionalPacking, BoundsFromBothSides) {
    const auto g = ks_graph();
    // Primal: w = 1/4 everywhere satisfies every clique (largest clique 4).
    std::vector<double> quarter(18, 0.25);
    EXPECT_LE(packing_violation(g, quarter), 0.0);
    // Dual: the nine bases cover each vertex twice, so sum w <= 9/2.
    const auto bases = find_bases(g, ks18_vectors());
    const auto r = fractional_packing(g);
    double twice = 0.0;
    for (const auto &b : bases) {
        for (int id : b.members) {
            twice += r.weights[g.index_of(id)];
        }
    }
    EXPECT_NEAR(twice, 2.0 * r.value, 1e-12);
    EXPECT_LE(twice, 9.0 + 1e-12);
}

TEST(FractionalPacking, FiveCycle) {
    const auto r = fractional_packing(ExclusivityGraph::cycle(5));
    EXPECT_EQ(r.exact_value, Rational(5, 2));
}

TEST(FractionalPacking, LargeGraphUsesFloatingPoint) {
    const auto r = fractional_packing(ExclusivityGraph::cycle(25));
    EXPECT_FALSE(r.exact);
    EXPECT_NEAR(r.value, 12.5, 1e-9);
}

TEST(Theta, KsGraphByCertificate) {
    const auto g = ks_graph();
    ComplexVector h(4);
    h << 1.0, 0.0, 0.0, 0.0;
    const auto cert = ks18_theta_certificate(PureState(h));
    const auto r = lovasz_theta(g, &cert);
    EXPECT_EQ(r.method, ThetaMethod::kCertificate);
    EXPECT_NEAR(r.theta, 4.5, 1e-12);
    EXPECT_NEAR(r.lower, 4.5, 1e-12);
    EXPECT_NEAR(r.upper, 4.5, 1e-12);
}

TEST(Theta, KsGraphBySdp) {
    const auto r = lovasz_theta(ks_graph());
    EXPECT_EQ(r.method, ThetaMethod::kSdp);
    EXPECT_NEAR(r.theta, 4.5, 1e-6);
    ASSERT_TRUE(r.sdp.has_value());
    EXPECT_TRUE(r.sdp->converged);
}

TEST(Theta, FiveCycleSandwich) {
    const auto g = ExclusivityGraph::cycle(5);
    const auto r = lovasz_theta(g);
    EXPECT_NEAR(r.theta, std::sqrt(5.0), 1e-6);
    EXPECT_LT(2.0, r.theta);
    EXPECT_LT(r.theta, 2.5);
}

TEST(Theta, UndeterminedWithoutSdp) {
    ThetaOptions opts;
    opts.allow_sdp = false;
    EXPECT_THROW(lovasz_theta(ExclusivityGraph::cycle(5), nullptr, opts), std::runtime_error);
}

TEST(Theta, CertificateMustRespectEdges) {
    // A certificate with parallel vectors on an edge is rejected.
    ComplexVector e0(2);
    e0 << 1.0, 0.0;
    ThetaCertificate bad{PureState(e0), {PureState(e0), PureState(e0)}};
    EXPECT_THROW(theta_certificate_value(ExclusivityGraph::complete(2), bad), std::invalid_argument);
}

TEST(Cover, KsComplementNeedsEighteenCliques) {
    const auto g = ks_graph();
    const auto r = clique_edge_cover_complement(g);
    EXPECT_EQ(r.cover.cliques.size(), 18u);
    EXPECT_EQ(r.minimal, Minimality::kProven);
    EXPECT_EQ(r.lower_bound, 18u);
    EXPECT_EQ(validate_cover(g, r.cover), "");
    for (VertexMask c : r.cover.cliques) {
        EXPECT_TRUE(g.is_independent(c));
    }
}

TEST(Cover, ZeroBudgetIsUpperBoundOnly) {
    const auto r = clique_edge_cover_complement(ks_graph(), std::chrono::milliseconds(0));
    EXPECT_EQ(r.minimal, Minimality::kUpperBoundOnly);
    EXPECT_GE(r.cover.cliques.size(), 18u);
    EXPECT_EQ(validate_cover(ks_graph(), r.cover), "");
    EXPECT_EQ(to_string(r.minimal), "upper-bound-only");
}

TEST(Cover, FiveCycle) {
    // The complement of C5 is C5; its edges need five 2-cliques.
    const auto g = ExclusivityGraph::cycle(5);
    const auto r = clique_edge_cover_complement(g);
    EXPECT_EQ(r.cover.cliques.size(), 5u);
    EXPECT_EQ(r.minimal, Minimality::kProven);
}

TEST(Cover, ValidationNamesTheProblem) {
    const auto g = ExclusivityGraph::cycle(5);
    CliqueEdgeCover empty;
    EXPECT_NE(validate_cover(g, empty), "");
    CliqueEdgeCover adjacent{{mask_of({0, 1})}};
    EXPECT_NE(validate_cover(g, adjacent), "");
}

TEST(Gap, KsRatios) {
    const auto g = ks_graph();
    ComplexVector h(4);
    h << 1.0, 0.0, 0.0, 0.0;
    const auto cert = ks18_theta_certificate(PureState(h));
    const auto gap = classical_quantum_gap(g, &cert);
    EXPECT_EQ(gap.alpha, 4u);
    EXPECT_DOUBLE_EQ(gap.alpha_star, 4.5);
    EXPECT_NEAR(gap.theta, 4.5, 1e-12);
    EXPECT_NEAR(gap.alpha_over_n, 4.0 / 18.0, 1e-15);
    EXPECT_NEAR(gap.theta_over_n, 0.25, 1e-12);
}

}  // namespace
}  // namespace ks18
