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

// The 18-ray Kochen-Specker set in dimension 4 and the 28-state catalog.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ks18/algebra.hpp"
#include "ks18/graph.hpp"
#include "ks18/invariants.hpp"

namespace ks18 {

struct KsVector {
    int id = 0;
    std::vector<long> components;

    Projector projector() const { return projector_from_vector(components); }
};

/// A complete orthogonal basis, by vertex id (ascending).
struct Basis {
    std::vector<int> members;

    friend bool operator==(const Basis &, const Basis &) = default;
};

/// v_1 .. v_18 in id order.
std::vector<KsVector> ks18_vectors();
/// v_19 .. v_24, the states outside the KS set used as extra inputs.
std::vector<KsVector> extra_vectors();

/// Vertices = vector ids, edge iff the integer dot product is zero.
ExclusivityGraph orthogonality_graph(const std::vector<KsVector> &vectors);

/// Every d-clique (d = vector dimension) whose projectors sum exactly to I.
std::vector<Basis> find_bases(const ExclusivityGraph &g, const std::vector<KsVector> &vectors);

/// Orthonormal representation of the KS graph by its own unit vectors.
ThetaCertificate ks18_theta_certificate(const PureState &handle);

/// Exact sum of all projectors.
HermitianOperator operator_completeness(const std::vector<KsVector> &vectors);

struct ColoringStats {
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
    double seconds = 0.0;
};

struct ColoringResult {
    bool satisfiable = false;
    /// vertex label -> 0/1, present only when satisfiable.
    std::map<int, int> assignment;
    ColoringStats stats;
};

/// Backtracking search for a 0/1 assignment with at most one 1 on every edge
/// and exactly one 1 in every basis. Branches on vertices by descending
/// degree (ties by index), trying 1 before 0.
ColoringResult verify_ks_uncolorability(const ExclusivityGraph &g, const std::vector<Basis> &bases);

struct KsCatalogEntry {
    std::string code;  // "v1".."v24", "rho25".."rho28"
    std::string description;
    std::optional<std::vector<long>> components;  // pure states only
    QMatrix exact;                                // exact density matrix
    DensityMatrix state;
};

/// The 28 states: v_1..v_24 then the mixtures rho_25..rho_28.
const std::vector<KsCatalogEntry> &state_catalog();

/// Accepts "v7", "v_7", "V7", "rho28", "rho_28", "ρ28", "ρ_28".
std::string normalize_state_code(const std::string &code);
/// Throws std::invalid_argument("unknown state code ...").
const KsCatalogEntry &catalog_entry(const std::string &code);

}  // namespace ks18
