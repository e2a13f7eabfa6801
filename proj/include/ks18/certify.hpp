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

// Ingestion of measured tables, noise estimation and certification of the
// quantum advantage against the noise-corrected classical bound.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ks18/graph.hpp"
#include "ks18/rational.hpp"

namespace ks18 {

enum class Quantity { kSigma, kXi, kEdgeProbability, kTermProbability };
std::string to_string(Quantity q);

struct MeasurementRecord {
    std::string state_code;  // normalized, e.g. "v1", "rho25"; empty for edges
    Quantity quantity = Quantity::kSigma;
    std::string key;  // "" (sigma, xi), "i,j" (edge), "P(abc|xyz)" (term)
    int i = 0;        // edges: test index
    int j = 0;        // edges: state index
    std::string context;   // terms only
    std::string outcomes;  // terms only
    double value = 0.0;
    double uncertainty = 0.0;
    std::string value_text;        // as printed
    std::string uncertainty_text;  // as printed; may be empty
    std::size_t line = 0;          // 1-based line in the source
    bool duplicate = false;        // same (state, key) seen on an earlier line

    friend bool operator==(const MeasurementRecord &, const MeasurementRecord &) = default;
};

/// Parses CSV text under one of the three schemas (chosen by header line).
/// `sigma_quantity` selects sigma or xi for the state_code,value,uncertainty
/// schema. Errors (std::invalid_argument) carry "line N: ...".
std::vector<MeasurementRecord> parse_table(const std::string &text, Quantity sigma_quantity = Quantity::kSigma);

/// Embedded ids: "table1", "table2", "table4", "table5", "terms" (or the
/// fixture file names). Anything else is read as a file path; a path whose
/// file name contains "xi" is read as xi.
std::vector<MeasurementRecord> load_table(const std::string &source, std::optional<Quantity> sigma_quantity = {});

/// Inverse of parse_table; reproduces the printed strings.
std::string export_table(const std::vector<MeasurementRecord> &records);

enum class Dedupe { kKeepAll, kKeepFirst };
std::vector<MeasurementRecord> dedupe(const std::vector<MeasurementRecord> &records, Dedupe mode);

struct NoiseParams {
    double epsilon = 0.0;
    double epsilon_uncertainty = 0.0;
};

struct EpsilonEstimate {
    NoiseParams params;
    std::size_t count = 0;
    std::vector<std::string> mismatches;  // records whose pair is not an edge
};

/// Mean of the edge probabilities and its standard error. When `g` is given,
/// pairs that are not edges are listed (not fatal). Throws on empty input.
EpsilonEstimate estimate_epsilon(const std::vector<MeasurementRecord> &records, const ExclusivityGraph *g = nullptr);

/// 4(1 - eps) + 18 eps. Throws std::invalid_argument for eps outside [0,1).
double corrected_classical_bound(const NoiseParams &p);
/// (4.5(1 - eps), 4.5(1 - eps) + 18 eps).
std::pair<double, double> expected_band(const NoiseParams &p);
/// The eps at which the corrected bound reaches 4.5: exactly 1/28.
Rational advantage_threshold();
inline constexpr double kRoundedThreshold = 0.035;

struct StateVerdict {
    std::string state_code;
    double measured = 0.0;
    double uncertainty = 0.0;
    bool advantage = false;  // measured - uncertainty > bound
    bool in_band = false;
    std::string verdict;  // "quantum advantage" | "no advantage"
};

struct CertificationReport {
    NoiseParams noise;
    double bound = 0.0;
    double band_min = 0.0;
    double band_max = 0.0;
    Rational threshold;
    double rounded_threshold = kRoundedThreshold;
    bool gate_ok = true;  // eps < 1/28
    std::vector<StateVerdict> states;
    std::size_t advantage_count = 0;
    std::size_t in_band_count = 0;
    std::vector<std::string> flags;
};

CertificationReport certify(const std::vector<MeasurementRecord> &records, const NoiseParams &p);

struct XiRecomputation {
    std::string state_code;
    double sum = 0.0;
    double uncertainty = 0.0;  // quadrature of the term errors
    std::optional<double> reference;
    double reference_uncertainty = 0.0;
    double difference = 0.0;
    double tolerance = 0.0;  // max(1e-3, combined uncertainty)
    bool match = true;
};

/// Per-state sums of the 18 terms (states in first-appearance order),
/// compared against `reference` xi records when given. Throws
/// std::invalid_argument listing missing term keys.
std::vector<XiRecomputation> recompute_xi_from_terms(const std::vector<MeasurementRecord> &terms,
                                                     const std::vector<MeasurementRecord> *reference = nullptr);

struct SummaryStatistics {
    std::size_t count = 0;
    double mean = 0.0;
    double standard_error = 0.0;
    /// Inverse-variance weighted; only when every record has uncertainty > 0.
    std::optional<double> weighted_mean;
    std::optional<double> weighted_standard_error;
};

SummaryStatistics summary_statistics(const std::vector<MeasurementRecord> &records);

struct EdgeTableCheck {
    std::size_t records = 0;
    std::vector<std::pair<int, int>> unmatched;   // pairs that are not edges
    std::vector<std::pair<int, int>> duplicates;  // repeated directed pairs
    std::vector<std::pair<int, int>> missing;     // directed edges with no record
};

EdgeTableCheck check_edge_table(const std::vector<MeasurementRecord> &records, const ExclusivityGraph &g);

}  // namespace ks18
