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

// Ideal quantum predictions for the 18 yes-no tests and for sequential
// measurements of the nine two-qubit Pauli observables
//
//   0 = Z⊗I   1 = I⊗Z   2 = Z⊗Z
//   3 = I⊗X   4 = X⊗I   5 = X⊗X
//   6 = Z⊗X   7 = X⊗Z   8 = Y⊗Y
//
// in the ordered basis {|t,H>, |t,V>, |r,H>, |r,V>} (left factor = path).
// Outcome bit 1 is eigenvalue +1, bit 0 is eigenvalue -1.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ks18/algebra.hpp"

namespace ks18 {

struct Observable {
    int id = 0;
    HermitianOperator op;
};

/// The nine observables, indexed by id.
const std::vector<Observable> &observables();
const Observable &observable(int id);

/// Ordered triple of pairwise commuting observables, measured left to right.
class Context {
   public:
    /// Throws std::invalid_argument("incompatible sequence") unless all
    /// three operators commute.
    explicit Context(std::array<int, 3> ids);

    const std::array<int, 3> &ids() const { return ids_; }
    std::string label() const;  // e.g. "012"

    friend bool operator==(const Context &, const Context &) = default;

   private:
    std::array<int, 3> ids_;
};

/// The six rows and columns: 012, 036, 345, 147, 678, 258.
const std::vector<Context> &ks_contexts();

struct Proposition {
    std::array<int, 3> outcomes{};
    Context context;

    std::string outcome_label() const;  // e.g. "001"
    std::string name() const;           // e.g. "P(001|012)"
};

/// The 18 terms of the noncontextuality sum, in table order.
const std::vector<Proposition> &xi_terms();

/// Sum over the 18 KS projectors of trace(rho P_i).
double sigma(const DensityMatrix &rho);

/// (I + s O)/2 with s = +1 for bit 1 and -1 for bit 0.
Projector outcome_projector(const Observable &obs, int bit);

/// P_a P_b P_c (exact).
Projector proposition_projector(const Proposition &prop);

/// Lüders probability trace(P_c P_b P_a rho P_a P_b P_c), cross-checked
/// against trace(rho P_a P_b P_c); throws std::logic_error if they differ
/// by more than tol.
double sequential_probability(const DensityMatrix &rho, const Proposition &prop, double tol = kTolAlg);

/// Probability of an arbitrary outcome sequence under successive Lüders
/// updates. Steps are (observable id, bit).
double luders_probability(const DensityMatrix &rho, const std::vector<std::pair<int, int>> &steps);

struct PropositionVertex {
    Proposition proposition;
    int vertex = 0;
};

/// Each of the 18 terms matched to the unique KS vertex with the same
/// projector. Throws std::runtime_error("correspondence broken").
std::vector<PropositionVertex> proposition_vertex_map();

/// Parity-allowed outcomes missing from the 18 terms (one per context),
/// matched against v_19..v_24.
std::vector<PropositionVertex> omitted_outcome_map();

/// Outcome triples whose projector vanishes (4 per context, 24 total).
std::vector<Proposition> parity_violating_propositions();

/// Sum of the 18 sequential probabilities.
double xi(const DensityMatrix &rho);

/// Ideal value of every term, keyed "P(abc|xyz)", for a catalog state.
std::vector<std::pair<std::string, double>> ideal_probability_table(const std::string &state_code);
std::vector<std::pair<std::string, double>> ideal_probability_table(const DensityMatrix &rho);

struct AuditReport {
    bool ok = true;
    double max_order_deviation = 0.0;
    double max_repeat_deviation = 0.0;
    double max_marginal_deviation = 0.0;
    int states = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> violations;
};

/// Repeat idempotence, order invariance and marginal consistency of a
/// context over `states` seeded random states.
AuditReport compatibility_audit(const Context &ctx, std::uint64_t seed = 1, int states = 100, double tol = kTolAlg);

struct NoiseChannel {
    enum class Kind { kNone, kVisibility };
    Kind kind = Kind::kNone;
    double visibility = 1.0;
};

/// V rho + (1 - V) I/d; throws std::invalid_argument for V outside [0,1].
DensityMatrix apply_noise(const DensityMatrix &rho, const NoiseChannel &ch);

/// Haar-random pure state: complex standard normal amplitudes, normalized.
PureState random_pure_state(std::mt19937_64 &rng, std::size_t dim = 4);
/// G G^dagger / trace for a complex Ginibre matrix G.
DensityMatrix random_mixed_state(std::mt19937_64 &rng, std::size_t dim = 4);

}  // namespace ks18
