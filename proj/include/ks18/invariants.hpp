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

#pragma once

// Exact and numerical invariants of small exclusivity graphs: independence
// number, fractional packing number, Lovász number and clique edge covers of
// the complement.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ks18/algebra.hpp"
#include "ks18/graph.hpp"
#include "ks18/rational.hpp"
#include "ks18/sdp.hpp"

namespace ks18 {

inline constexpr double kTolLp = 1e-9;
inline constexpr double kTolSdp = 1e-6;
inline constexpr std::size_t kExactIndependenceLimit = 40;
inline constexpr std::size_t kExactLpLimit = 24;
inline constexpr std::size_t kSdpLimit = 32;

struct IndependenceResult {
    std::size_t alpha = 0;
    std::vector<std::size_t> witness;  // 0-based indices, ascending
    std::uint64_t nodes = 0;
};

/// Exact alpha(G). The witness is the lexicographically first maximum
/// independent set. Throws std::invalid_argument above `limit` vertices.
IndependenceResult independence_number(const ExclusivityGraph &g, std::size_t limit = kExactIndependenceLimit);

/// All maximal cliques, largest first, ties ordered lexicographically by
/// their ascending member lists.
std::vector<VertexMask> maximal_cliques(const ExclusivityGraph &g);

struct PackingResult {
    double value = 0.0;
    std::vector<double> weights;
    bool exact = false;
    /// Filled in exact mode only.
    Rational exact_value;
    std::vector<Rational> exact_weights;
};

/// alpha*(G) = max sum w_i over w in [0,1]^n with sum_{i in c} w_i <= 1 for
/// every maximal clique c. Exact rational simplex up to 24 vertices, floating
/// point above.
PackingResult fractional_packing(const ExclusivityGraph &g);

/// Largest clique-constraint violation of a weight vector (<= 0 when feasible).
double packing_violation(const ExclusivityGraph &g, const std::vector<double> &w);

/// Orthonormal representation: adjacent vertices carry orthogonal vectors.
struct ThetaCertificate {
    PureState handle;
    std::vector<PureState> vectors;
};

/// sum_i |<handle|v_i>|^2 after checking orthogonality on every edge
/// (throws std::invalid_argument when an edge is not orthogonal within tol).
double theta_certificate_value(const ExclusivityGraph &g, const ThetaCertificate &cert, double tol = kTolAlg);

enum class ThetaMethod { kCertificate, kSdp };
std::string to_string(ThetaMethod m);

struct ThetaOptions {
    bool allow_sdp = true;
    double tol = kTolSdp;
};

struct ThetaResult {
    double theta = 0.0;
    ThetaMethod method = ThetaMethod::kSdp;
    double lower = 0.0;  // certificate value, or SDP primal
    double upper = 0.0;  // alpha*, or SDP dual
    std::optional<SdpResult> sdp;
};

/// With a certificate, pinches the certificate lower bound against alpha*;
/// otherwise (or if the bounds stay apart) solves the SDP when allowed.
/// Throws std::runtime_error("theta undetermined") when neither path applies.
ThetaResult lovasz_theta(const ExclusivityGraph &g, const ThetaCertificate *cert = nullptr, ThetaOptions opts = {});

enum class Minimality { kProven, kUpperBoundOnly };
std::string to_string(Minimality m);

struct CliqueEdgeCover {
    std::vector<VertexMask> cliques;  // cliques of the complement
};

struct CoverResult {
    CliqueEdgeCover cover;
    Minimality minimal = Minimality::kUpperBoundOnly;
    std::size_t lower_bound = 0;
    std::uint64_t nodes = 0;
};

/// Clique edge cover of the complement of g (each clique is an independent
/// set of g). Branch and bound over maximal cliques runs within `budget`;
/// minimality is reported as proven only when the search completes.
CoverResult clique_edge_cover_complement(const ExclusivityGraph &g,
                                         std::chrono::milliseconds budget = std::chrono::seconds(60));

/// Empty string when every complement edge is covered and every clique is
/// independent in g; otherwise a description of the first problem.
std::string validate_cover(const ExclusivityGraph &g, const CliqueEdgeCover &cover);

struct GapReport {
    std::size_t alpha = 0;
    double alpha_star = 0.0;
    double theta = 0.0;
    std::size_t n = 0;
    double alpha_over_n = 0.0;
    double theta_over_n = 0.0;
};

GapReport classical_quantum_gap(const ExclusivityGraph &g, const ThetaCertificate *cert = nullptr);

}  // namespace ks18
