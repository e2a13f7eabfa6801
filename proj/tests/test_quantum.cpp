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
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "ks18/ksets.hpp"
#include "ks18/quantum.hpp"

namespace ks18 {
namespace {

TEST(Observables, PauliProductsSquareToIdentity) {
    ASSERT_EQ(observables().size(), 9u);
    for (const auto &o : observables()) {
        EXPECT_EQ(o.op.exact() * o.op.exact(), QMatrix::identity(4)) << o.id;
        EXPECT_TRUE(o.op.exact().trace().is_zero()) << o.id;
    }
    // 0 = Z (x) I acts on the path: diag(1, 1, -1, -1).
    EXPECT_EQ(observable(0).op.exact(), QMatrix::diagonal({1, 1, -1, -1}));
    EXPECT_EQ(observable(1).op.exact(), QMatrix::diagonal({1, -1, 1, -1}));
    EXPECT_THROW(observable(9), std::out_of_range);
}

TEST(Contexts, ProductsAreIdentityExceptTheLastColumn) {
    for (const auto &ctx : ks_contexts()) {
        const auto &ids = ctx.ids();
        const QMatrix p = observable(ids[0]).op.exact() * observable(ids[1]).op.exact() * observable(ids[2]).op.exact();
        const QMatrix expected = ctx.label() == "258" ? QComplex(-1) * QMatrix::identity(4) : QMatrix::identity(4);
        EXPECT_EQ(p, expected) << ctx.label();
    }
}

TEST(Contexts, NonCommutingTripleRejected) {
    try {
        Context c({0, 4, 2});
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument &e) {
        EXPECT_STREQ(e.what(), "incompatible sequence");
    }
    EXPECT_NO_THROW(Context({2, 5, 8}));
}

TEST(Terms, EighteenNamedTerms) {
    const auto &t = xi_terms();
    ASSERT_EQ(t.size(), 18u);
    EXPECT_EQ(t.front().name(), "P(001|012)");
    EXPECT_EQ(t[5].name(), "P(100|036)");
    EXPECT_EQ(t.back().name(), "P(011|258)");
    std::set<std::string> names;
    for (const auto &p : t) {
        names.insert(p.name());
    }
    EXPECT_EQ(names.size(), 18u);
}

TEST(Correspondence, PropositionsAreTheKsProjectors) {
    const auto map = proposition_vertex_map();
    ASSERT_EQ(map.size(), 18u);
    std::set<int> vertices;
    for (const auto &pv : map) {
        vertices.insert(pv.vertex);
        EXPECT_EQ(proposition_projector(pv.proposition), ks18_vectors()[pv.vertex - 1].projector());
    }
    EXPECT_EQ(vertices.size(), 18u);
}

TEST(Correspondence, HandCheckedEntries) {
    const auto proj = [](std::array<int, 3> out, std::array<int, 3> ids) {
        return proposition_projector(Proposition{out, Context(ids)});
    };
    // (+1,-1,-1) on (ZI, IX, ZX) selects |t>|->, i.e. (1,-1,0,0) = v5.
    EXPECT_EQ(proj({1, 0, 0}, {0, 3, 6}), projector_from_vector(std::vector<long>{1, -1, 0, 0}));
    EXPECT_EQ(proj({1, 1, 1}, {1, 4, 7}), projector_from_vector(std::vector<long>{1, 0, 1, 0}));
    EXPECT_EQ(proj({1, 1, 0}, {2, 5, 8}), projector_from_vector(std::vector<long>{1, 0, 0, 1}));
}

TEST(Correspondence, OmittedOutcomesAreTheExtraStates) {
    const auto omitted = omitted_outcome_map();
    ASSERT_EQ(omitted.size(), 6u);
    const std::vector<std::pair<std::string, int>> expected = {
        {"P(010|012)", 19}, {"P(111|036)", 20}, {"P(001|345)", 22},
        {"P(010|147)", 21}, {"P(010|678)", 23}, {"P(101|258)", 24},
    };
    for (std::size_t k = 0; k < 6; ++k) {
        EXPECT_EQ(omitted[k].proposition.name(), expected[k].first);
        EXPECT_EQ(omitted[k].vertex, expected[k].second);
    }
}

TEST(Parity, ViolatingOutcomesNeverOccur) {
    const auto bad = parity_violating_propositions();
    ASSERT_EQ(bad.size(), 24u);
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
        const auto rho = DensityMatrix::from_pure(random_pure_state(rng));
        for (const auto &p : bad) {
            worst = std::max(worst, sequential_probability(rho, p));
        }
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(StateIndependence, CatalogStates) {
    for (const auto &e : state_catalog()) {
        EXPECT_NEAR(sigma(e.state), 4.5, 1e-12) << e.code;
        EXPECT_NEAR(xi(e.state), 4.5, 1e-12) << e.code;
    }
}

TEST(StateIndependence, RandomStates) {
    std::mt19937_64 rng(5);
    for (int s = 0; s < 200; ++s) {
        const auto rho = DensityMatrix::from_pure(random_pure_state(rng));
        EXPECT_NEAR(sigma(rho), 4.5, 1e-12);
        EXPECT_NEAR(xi(rho), 4.5, 1e-12);
    }
    for (int s = 0; s < 50; ++s) {
        const auto rho = random_mixed_state(rng);
        EXPECT_NEAR(sigma(rho), 4.5, 1e-12);
        EXPECT_NEAR(xi(rho), 4.5, 1e-12);
    }
}

TEST(Sequential, IdealTermTables) {
    const auto mixed = ideal_probability_table("rho28");
    ASSERT_EQ(mixed.size(), 18u);
    for (const auto &[k, v] : mixed) {
        EXPECT_NEAR(v, 0.25, 1e-15) << k;
    }
    // v11 is an eigenstate of P(111|147).
    for (const auto &[k, v] : ideal_probability_table("v11")) {
        if (k == "P(111|147)") {
            EXPECT_NEAR(v, 1.0, 1e-15);
        }
    }
}

TEST(Sequential, LudersMatchesJointProjector) {
    std::mt19937_64 rng(9);
    const auto rho = random_mixed_state(rng);
    for (const auto &p : xi_terms()) {
        const auto &ids = p.context.ids();
        const double l = luders_probability(rho, {{ids[0], p.outcomes[0]}, {ids[1], p.outcomes[1]}, {ids[2], p.outcomes[2]}});
        EXPECT_NEAR(l, sequential_probability(rho, p), 1e-14);
    }
}

TEST(Sequential, NoncommutingOrderMatters) {
    // Z then X then Z on |0>|0>: P(+,+,+) = 1/4, unlike a commuting context.
    ComplexVector v(4);
    v << 1.0, 0.0, 0.0, 0.0;
    const auto rho = DensityMatrix::from_pure(PureState(v));
    EXPECT_NEAR(luders_probability(rho, {{0, 1}, {4, 1}, {0, 1}}), 0.25, 1e-15);
}

TEST(Audit, AllContextsCompatible) {
    for (const auto &ctx : ks_contexts()) {
        const auto r = compatibility_audit(ctx, 1, 100);
        EXPECT_TRUE(r.ok) << ctx.label();
        EXPECT_LT(r.max_order_deviation, 1e-12);
        EXPECT_LT(r.max_repeat_deviation, 1e-12);
        EXPECT_LT(r.max_marginal_deviation, 1e-12);
        EXPECT_EQ(r.states, 100);
    }
}

TEST(Noise, VisibilityChannel) {
    const auto &v7 = catalog_entry("v7").state;
    const auto white = apply_noise(v7, NoiseChannel{NoiseChannel::Kind::kVisibility, 0.0});
    EXPECT_TRUE(white.matrix().isApprox(ComplexMatrix::Identity(4, 4) / 4.0, 1e-15));
    const auto half = apply_noise(v7, NoiseChannel{NoiseChannel::Kind::kVisibility, 0.5});
    EXPECT_NEAR(sigma(half), 4.5, 1e-12);
    EXPECT_THROW(apply_noise(v7, NoiseChannel{NoiseChannel::Kind::kVisibility, 1.2}), std::invalid_argument);
    EXPECT_THROW(apply_noise(v7, NoiseChannel{NoiseChannel::Kind::kVisibility, -0.1}), std::invalid_argument);
}

TEST(RandomStates, SeededAndNormalized) {
    std::mt19937_64 a(42);
    std::mt19937_64 b(42);
    const auto x = random_pure_state(a);
    const auto y = random_pure_state(b);
    EXPECT_EQ(x.amplitudes(), y.amplitudes());
    EXPECT_NEAR(x.amplitudes().norm(), 1.0, 1e-15);
    const auto rho = random_mixed_state(a);
    EXPECT_TRUE(is_density_matrix(rho.matrix()).ok);
}

}  // namespace
}  // namespace ks18
