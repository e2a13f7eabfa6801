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

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ks18/ksets.hpp"

namespace ks18 {
namespace {

long dot(const std::vector<long> &a, const std::vector<long> &b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0L);
}

// Exhaustive check over all 2^n assignments: at most one 1 per edge and
// exactly one 1 per basis.
bool brute_force_colorable(const ExclusivityGraph &g, const std::vector<Basis> &bases) {
    const std::size_t n = g.size();
    const auto edges = g.edges();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        bool ok = true;
        for (const auto &b : bases) {
            int ones = 0;
            for (int id : b.members) {
                ones += static_cast<int>((a >> g.index_of(id)) & 1U);
            }
            if (ones != 1) {
                ok = false;
                break;
            }
        }
        for (std::size_t e = 0; ok && e < edges.size(); ++e) {
            ok = !(((a >> edges[e].first) & 1U) && ((a >> edges[e].second) & 1U));
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

class KsSet : public ::testing::Test {
   protected:
    void SetUp() override {
        vectors = ks18_vectors();
        graph = orthogonality_graph(vectors);
        bases = find_bases(graph, vectors);
    }
    std::vector<KsVector> vectors;
    ExclusivityGraph graph;
    std::vector<Basis> bases;
};

TEST_F(KsSet, EighteenIntegerRays) {
    ASSERT_EQ(vectors.size(), 18u);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        EXPECT_EQ(vectors[i].id, static_cast<int>(i) + 1);
        EXPECT_EQ(vectors[i].components.size(), 4u);
    }
    EXPECT_EQ(vectors[0].components, (std::vector<long>{1, 0, 0, 0}));
    EXPECT_EQ(vectors[12].components, (std::vector<long>{-1, 1, 1, 1}));
}

TEST_F(KsSet, EdgesAreExactlyTheZeroInnerProducts) {
    std::size_t zero_pairs = 0;
    for (std::size_t i = 0; i < 18; ++i) {
        for (std::size_t j = i + 1; j < 18; ++j) {
            const bool orth = dot(vectors[i].components, vectors[j].components) == 0;
            zero_pairs += orth ? 1 : 0;
            EXPECT_EQ(graph.adjacent(i, j), orth) << i + 1 << "," << j + 1;
        }
    }
    EXPECT_EQ(zero_pairs, 63u);
    EXPECT_EQ(graph.edge_count(), 63u);
}

TEST_F(KsSet, SevenRegular) {
    for (std::size_t v = 0; v < graph.size(); ++v) {
        EXPECT_EQ(graph.degree(v), 7u) << "vertex " << v + 1;
    }
}

TEST_F(KsSet, NineBasesEachVertexInTwo) {
    ASSERT_EQ(bases.size(), 9u);
    // Oracle: every pairwise-orthogonal quadruple.
    std::size_t quads = 0;
    for (std::size_t a = 0; a < 18; ++a)
        for (std::size_t b = a + 1; b < 18; ++b)
            for (std::size_t c = b + 1; c < 18; ++c)
                for (std::size_t d = c + 1; d < 18; ++d)
                    quads += graph.is_clique(mask_of({a, b, c, d})) ? 1 : 0;
    EXPECT_EQ(quads, 9u);
    std::vector<int> membership(18, 0);
    for (const auto &b : bases) {
        ASSERT_EQ(b.members.size(), 4u);
        for (int id : b.members) {
            ++membership[static_cast<std::size_t>(id - 1)];
        }
    }
    for (int m : membership) {
        EXPECT_EQ(m, 2);
    }
    EXPECT_EQ(bases.front().members, (std::vector<int>{1, 2, 3, 4}));
}

TEST_F(KsSet, CompletenessIsNineHalvesIdentity) {
    const auto sum = operator_completeness(vectors);
    EXPECT_EQ(sum.exact(), QComplex(Rational(9, 2)) * QMatrix::identity(4));
}

TEST_F(KsSet, EachBasisResolvesIdentity) {
    for (const auto &b : bases) {
        QMatrix s(4);
        for (int id : b.members) {
            s = s + vectors[static_cast<std::size_t>(id - 1)].projector().exact();
        }
        EXPECT_EQ(s, QMatrix::identity(4));
    }
}

TEST_F(KsSet, Uncolorable) {
    const auto r = verify_ks_uncolorability(graph, bases);
    EXPECT_FALSE(r.satisfiable);
    EXPECT_TRUE(r.assignment.empty());
    EXPECT_LT(r.stats.seconds, 1.0);
}

TEST_F(KsSet, UncolorableAgreesWithExhaustiveSearch) {
    EXPECT_FALSE(brute_force_colorable(graph, bases));
}

TEST_F(KsSet, DroppingABasisAgreesWithExhaustiveSearch) {
    for (std::size_t k = 0; k < bases.size(); ++k) {
        auto fewer = bases;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
        const auto r = verify_ks_uncolorability(graph, fewer);
        EXPECT_EQ(r.satisfiable, brute_force_colorable(graph, fewer)) << "dropped basis " << k + 1;
        if (r.satisfiable) {
            for (const auto &b : fewer) {
                int ones = 0;
                for (int id : b.members) {
                    ones += r.assignment.at(id);
                }
                EXPECT_EQ(ones, 1);
            }
        }
    }
}

TEST_F(KsSet, UncolorableUnderRelabeling) {
    for (unsigned seed = 1; seed <= 10; ++seed) {
        std::vector<std::size_t> perm(18);
        std::iota(perm.begin(), perm.end(), 0);
        std::mt19937_64 rng(seed);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto g = graph.permuted(perm);
        EXPECT_FALSE(verify_ks_uncolorability(g, bases).satisfiable) << "seed " << seed;
    }
}

TEST_F(KsSet, EmptyBasisIsUnsatisfiable) {
    auto broken = bases;
    broken.push_back(Basis{});
    EXPECT_FALSE(verify_ks_uncolorability(graph, broken).satisfiable);
}

TEST(Ksets, SingleBasisIsColorable) {
    std::vector<KsVector> v = {{1, {1, 0, 0, 0}}, {2, {0, 1, 0, 0}}, {3, {0, 0, 1, 0}}, {4, {0, 0, 0, 1}}};
    const auto g = orthogonality_graph(v);
    const auto b = find_bases(g, v);
    ASSERT_EQ(b.size(), 1u);
    const auto r = verify_ks_uncolorability(g, b);
    EXPECT_TRUE(r.satisfiable);
    int ones = 0;
    for (const auto &[id, x] : r.assignment) {
        ones += x;
    }
    EXPECT_EQ(ones, 1);
}

TEST(Ksets, DegenerateAndMismatchedVectors) {
    EXPECT_THROW(orthogonality_graph({{1, {0, 0, 0, 0}}, {2, {1, 0, 0, 0}}}), std::invalid_argument);
    EXPECT_THROW(orthogonality_graph({{1, {1, 0, 0}}, {2, {1, 0, 0, 0}}}), std::invalid_argument);
}

TEST(Ksets, ExtraVectorsAreOutsideTheSet) {
    const auto extra = extra_vectors();
    ASSERT_EQ(extra.size(), 6u);
    EXPECT_EQ(extra.front().id, 19);
    EXPECT_EQ(extra.back().components, (std::vector<long>{1, 0, 0, -1}));
    for (const auto &e : extra) {
        for (const auto &k : ks18_vectors()) {
            EXPECT_FALSE(e.projector() == k.projector());
        }
    }
}

TEST(Catalog, TwentyEightStates) {
    const auto &cat = state_catalog();
    ASSERT_EQ(cat.size(), 28u);
    EXPECT_EQ(cat.front().code, "v1");
    EXPECT_EQ(cat[23].code, "v24");
    EXPECT_EQ(cat.back().code, "rho28");
    for (const auto &e : cat) {
        EXPECT_EQ(e.exact.trace(), QComplex(1)) << e.code;
        EXPECT_TRUE(e.exact.is_hermitian()) << e.code;
    }
}

TEST(Catalog, MixturesAreExact) {
    EXPECT_EQ(catalog_entry("rho28").exact, QComplex(Rational(1, 4)) * QMatrix::identity(4));
    // rho25 = 13/16 psi1 + 1/16 (psi2 + psi3 + psi4); psi1 = (1,0,0,1)/sqrt2
    const auto &r25 = catalog_entry("rho25").exact;
    EXPECT_EQ(r25(0, 0), QComplex(Rational(7, 16)));
    EXPECT_EQ(r25(0, 3), QComplex(Rational(13, 32) - Rational(1, 32)));
    EXPECT_FALSE(catalog_entry("rho25").components.has_value());
    EXPECT_TRUE(catalog_entry("v7").components.has_value());
}

TEST(Catalog, CodeSpellings) {
    EXPECT_EQ(normalize_state_code("v_{11}"), "v11");
    EXPECT_EQ(normalize_state_code("V7"), "v7");
    EXPECT_EQ(normalize_state_code("ρ_{28}"), "rho28");
    EXPECT_EQ(normalize_state_code("rho_25"), "rho25");
    EXPECT_EQ(catalog_entry("ρ28").code, "rho28");
    EXPECT_THROW(catalog_entry("v99"), std::invalid_argument);
    EXPECT_THROW(catalog_entry("psi1"), std::invalid_argument);
}

TEST(Catalog, ThetaCertificateUsesTheRays) {
    ComplexVector h(4);
    h << 1.0, 0.0, 0.0, 0.0;
    const auto cert = ks18_theta_certificate(PureState(h));
    EXPECT_EQ(cert.vectors.size(), 18u);
    const auto g = orthogonality_graph(ks18_vectors());
    // sum_i |<h|u_i>|^2 = <h| (9/2 I) |h> = 4.5 for any unit handle.
    EXPECT_NEAR(theta_certificate_value(g, cert), 4.5, 1e-12);
}

}  // namespace
}  // namespace ks18
