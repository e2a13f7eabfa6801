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

#include "ks18/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ks18/datasets.hpp"
#include "ks18/ksets.hpp"
#include "ks18/quantum.hpp"

namespace ks18 {

namespace {

const char *kSigmaHeader = "state_code,value,uncertainty";
const char *kEdgeHeader = "i,j,value";
const char *kTermHeader = "state_code,context,outcomes,value,uncertainty";

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        out.push_back(trim(field));
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string &what) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

double parse_number(const std::string &s, std::size_t line, const char *what) {
    if (s.empty()) {
        fail(line, std::string("missing ") + what);
    }
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) {
        fail(line, std::string("malformed ") + what + " '" + s + "'");
    }
    return v;
}

int parse_index(const std::string &s, std::size_t line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) {
        fail(line, "malformed vertex index '" + s + "'");
    }
    const int v = std::stoi(s);
    if (v < 1) {
        fail(line, "vertex index must be positive");
    }
    return v;
}

std::string record_name(const MeasurementRecord &r) {
    switch (r.quantity) {
        case Quantity::kSigma:
        case Quantity::kXi:
            return to_string(r.quantity) + " of " + r.state_code;
        case Quantity::kEdgeProbability:
            return "p_{" + std::to_string(r.i) + "," + std::to_string(r.j) + "}";
        case Quantity::kTermProbability:
            return r.key + " of " + r.state_code;
    }
    return "";
}

void check_range(const MeasurementRecord &r) {
    const double hi = (r.quantity == Quantity::kSigma || r.quantity == Quantity::kXi) ? 18.0 : 1.0;
    if (r.value < 0.0 || r.value > hi) {
        fail(r.line, "value " + r.value_text + " out of range for " + record_name(r));
    }
    if (r.uncertainty < 0.0) {
        fail(r.line, "negative uncertainty for " + record_name(r));
    }
}

double mean_of(const std::vector<double> &xs) {
    double s = 0.0;
    for (double x : xs) {
        s += x;
    }
    return s / static_cast<double>(xs.size());
}

double standard_error_of(const std::vector<double> &xs, double mean) {
    if (xs.size() < 2) {
        return 0.0;
    }
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    const double n = static_cast<double>(xs.size());
    return std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
}

void check_epsilon(double eps) {
    if (!(eps >= 0.0 && eps < 1.0)) {
        throw std::invalid_argument("epsilon must lie in [0,1)");
    }
}

}  // namespace

std::string to_string(Quantity q) {
    switch (q) {
        case Quantity::kSigma:
            return "sigma";
        case Quantity::kXi:
            return "xi";
        case Quantity::kEdgeProbability:
            return "edge-probability";
        case Quantity::kTermProbability:
            return "term-probability";
    }
    return "";
}

std::vector<MeasurementRecord> parse_table(const std::string &text, Quantity sigma_quantity) {
    if (sigma_quantity != Quantity::kSigma && sigma_quantity != Quantity::kXi) {
        throw std::invalid_argument("sigma_quantity must be sigma or xi");
    }
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    std::string header;
    while (header.empty() && std::getline(in, raw)) {
        ++line;
        header = trim(raw);
    }
    if (header.empty()) {
        throw std::invalid_argument("line 1: empty table");
    }
    if (header != kSigmaHeader && header != kEdgeHeader && header != kTermHeader) {
        throw std::invalid_argument("line " + std::to_string(line) + ": unrecognized header '" + header + "'");
    }
    std::vector<MeasurementRecord> out;
    std::set<std::tuple<std::string, int, std::string>> seen;
    while (std::getline(in, raw)) {
        ++line;
        const std::string row = trim(raw);
        if (row.empty()) {
            continue;
        }
        const auto f = split_fields(row);
        MeasurementRecord r;
        r.line = line;
        if (header == kSigmaHeader) {
            if (f.size() != 3) {
                fail(line, "expected 3 fields, got " + std::to_string(f.size()));
            }
            r.quantity = sigma_quantity;
            r.state_code = normalize_state_code(f[0]);
            r.value_text = f[1];
            r.uncertainty_text = f[2];
        } else if (header == kEdgeHeader) {
            if (f.size() != 3) {
                fail(line, "expected 3 fields, got " + std::to_string(f.size()));
            }
            r.quantity = Quantity::kEdgeProbability;
            r.i = parse_index(f[0], line);
            r.j = parse_index(f[1], line);
            if (r.i == r.j) {
                fail(line, "edge probability with i = j");
            }
            r.key = std::to_string(r.i) + "," + std::to_string(r.j);
            r.value_text = f[2];
        } else if (header == kTermHeader) {
            if (f.size() != 5) {
                fail(line, "expected 5 fields, got " + std::to_string(f.size()));
            }
            r.quantity = Quantity::kTermProbability;
            r.state_code = normalize_state_code(f[0]);
            r.context = f[1];
            r.outcomes = f[2];
            if (r.context.size() != 3 || r.context.find_first_not_of("012345678") != std::string::npos) {
                fail(line, "malformed context '" + r.context + "'");
            }
            if (r.outcomes.size() != 3 || r.outcomes.find_first_not_of("01") != std::string::npos) {
                fail(line, "malformed outcomes '" + r.outcomes + "'");
            }
            r.key = "P(" + r.outcomes + "|" + r.context + ")";
            r.value_text = f[3];
            r.uncertainty_text = f[4];
        }
        if (r.quantity != Quantity::kEdgeProbability && r.state_code.empty()) {
            fail(line, "missing state code");
        }
        r.value = parse_number(r.value_text, line, "value");
        r.uncertainty = r.uncertainty_text.empty() ? 0.0 : parse_number(r.uncertainty_text, line, "uncertainty");
        check_range(r);
        r.duplicate = !seen.insert({r.state_code, static_cast<int>(r.quantity), r.key}).second;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<MeasurementRecord> load_table(const std::string &source, std::optional<Quantity> sigma_quantity) {
    static const std::map<std::string, std::pair<std::string, Quantity>> ids = {
        {"table1", {"table1_sigma.csv", Quantity::kSigma}},  {"table2", {"table2_xi.csv", Quantity::kXi}},
        {"table4", {"table4_sigma.csv", Quantity::kSigma}},  {"table5", {"table5_edges.csv", Quantity::kSigma}},
        {"terms", {"terms.csv", Quantity::kSigma}},
    };
    for (const auto &[id, entry] : ids) {
        if (source == id || source == entry.first) {
            return parse_table(fixture_text(entry.first), sigma_quantity.value_or(entry.second));
        }
    }
    std::ifstream in(source, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot read " + source);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    Quantity q = Quantity::kSigma;
    if (sigma_quantity) {
        q = *sigma_quantity;
    } else if (std::filesystem::path(source).filename().string().find("xi") != std::string::npos) {
        q = Quantity::kXi;
    }
    return parse_table(ss.str(), q);
}

std::string export_table(const std::vector<MeasurementRecord> &records) {
    const Quantity q = records.empty() ? Quantity::kSigma : records.front().quantity;
    std::ostringstream out;
    switch (q) {
        case Quantity::kSigma:
        case Quantity::kXi:
            out << kSigmaHeader << "\n";
            break;
        case Quantity::kEdgeProbability:
            out << kEdgeHeader << "\n";
            break;
        case Quantity::kTermProbability:
            out << kTermHeader << "\n";
            break;
    }
    for (const auto &r : records) {
        if (r.quantity != q) {
            throw std::invalid_argument("export_table: mixed quantities");
        }
        switch (q) {
            case Quantity::kSigma:
            case Quantity::kXi:
                out << r.state_code << "," << r.value_text << "," << r.uncertainty_text << "\n";
                break;
            case Quantity::kEdgeProbability:
                out << r.i << "," << r.j << "," << r.value_text << "\n";
                break;
            case Quantity::kTermProbability:
                out << r.state_code << "," << r.context << "," << r.outcomes << "," << r.value_text << ","
                    << r.uncertainty_text << "\n";
                break;
        }
    }
    return out.str();
}

std::vector<MeasurementRecord> dedupe(const std::vector<MeasurementRecord> &records, Dedupe mode) {
    if (mode == Dedupe::kKeepAll) {
        return records;
    }
    std::vector<MeasurementRecord> out;
    for (const auto &r : records) {
        if (!r.duplicate) {
            out.push_back(r);
        }
    }
    return out;
}

EpsilonEstimate estimate_epsilon(const std::vector<MeasurementRecord> &records, const ExclusivityGraph *g) {
    EpsilonEstimate est;
    std::vector<double> values;
    for (const auto &r : records) {
        if (r.quantity != Quantity::kEdgeProbability) {
            continue;
        }
        values.push_back(r.value);
        if (g != nullptr) {
            bool edge = false;
            try {
                edge = g->adjacent(g->index_of(r.i), g->index_of(r.j));
            } catch (const std::exception &) {
                edge = false;
            }
            if (!edge) {
                est.mismatches.push_back("p_{" + std::to_string(r.i) + "," + std::to_string(r.j) + "} is not an edge");
            }
        }
    }
    if (values.empty()) {
        throw std::invalid_argument("estimate_epsilon: no edge probabilities");
    }
    est.count = values.size();
    est.params.epsilon = mean_of(values);
    est.params.epsilon_uncertainty = standard_error_of(values, est.params.epsilon);
    return est;
}

double corrected_classical_bound(const NoiseParams &p) {
    check_epsilon(p.epsilon);
    return 4.0 * (1.0 - p.epsilon) + 18.0 * p.epsilon;
}

std::pair<double, double> expected_band(const NoiseParams &p) {
    check_epsilon(p.epsilon);
    const double lo = 4.5 * (1.0 - p.epsilon);
    return {lo, lo + 18.0 * p.epsilon};
}

Rational advantage_threshold() {
    // 4 + 14 eps = 9/2  <=>  eps = 1/28
    Rational eps = (Rational(9, 2) - 4) / 14;
    eps.canonicalize();
    return eps;
}

CertificationReport certify(const std::vector<MeasurementRecord> &records, const NoiseParams &p) {
    CertificationReport rep;
    rep.noise = p;
    rep.bound = corrected_classical_bound(p);
    std::tie(rep.band_min, rep.band_max) = expected_band(p);
    rep.threshold = advantage_threshold();
    rep.gate_ok = Rational(p.epsilon) < rep.threshold;
    if (!rep.gate_ok) {
        rep.flags.push_back("classical bound exceeds quantum value");
    }
    for (const auto &r : records) {
        if (r.quantity != Quantity::kSigma && r.quantity != Quantity::kXi) {
            continue;
        }
        StateVerdict v;
        v.state_code = r.state_code;
        v.measured = r.value;
        v.uncertainty = r.uncertainty;
        v.advantage = r.value - r.uncertainty > rep.bound;
        v.in_band = r.value >= rep.band_min && r.value <= rep.band_max;
        v.verdict = v.advantage ? "quantum advantage" : "no advantage";
        rep.advantage_count += v.advantage ? 1 : 0;
        rep.in_band_count += v.in_band ? 1 : 0;
        if (!v.in_band) {
            rep.flags.push_back(r.state_code + " outside expected band");
        }
        rep.states.push_back(std::move(v));
    }
    return rep;
}

std::vector<XiRecomputation> recompute_xi_from_terms(const std::vector<MeasurementRecord> &terms,
                                                     const std::vector<MeasurementRecord> *reference) {
    std::vector<std::string> order;
    std::map<std::string, std::map<std::string, const MeasurementRecord *>> by_state;
    for (const auto &r : terms) {
        if (r.quantity != Quantity::kTermProbability) {
            continue;
        }
        if (!by_state.count(r.state_code)) {
            order.push_back(r.state_code);
        }
        by_state[r.state_code].emplace(r.key, &r);  // keeps the first occurrence
    }
    std::set<std::string> expected;
    for (const auto &prop : xi_terms()) {
        expected.insert(prop.name());
    }
    std::vector<std::string> problems;
    for (const auto &state : order) {
        for (const auto &prop : xi_terms()) {
            if (!by_state[state].count(prop.name())) {
                problems.push_back(state + " missing " + prop.name());
            }
        }
        for (const auto &[key, rec] : by_state[state]) {
            if (!expected.count(key)) {
                problems.push_back(state + " unexpected " + key);
            }
        }
    }
    if (!problems.empty()) {
        std::string msg = "incomplete term table:";
        for (const auto &p : problems) {
            msg += " " + p + ";";
        }
        throw std::invalid_argument(msg);
    }

    std::vector<XiRecomputation> out;
    for (const auto &state : order) {
        XiRecomputation x;
        x.state_code = state;
        double var = 0.0;
        for (const auto &prop : xi_terms()) {
            const auto *rec = by_state[state].at(prop.name());
            x.sum += rec->value;
            var += rec->uncertainty * rec->uncertainty;
        }
        x.uncertainty = std::sqrt(var);
        x.tolerance = 1e-3;
        if (reference != nullptr) {
            for (const auto &r : *reference) {
                if (r.quantity == Quantity::kXi && r.state_code == state) {
                    x.reference = r.value;
                    x.reference_uncertainty = r.uncertainty;
                    break;
                }
            }
        }
        if (x.reference) {
            x.difference = x.sum - *x.reference;
            x.tolerance = std::max(1e-3, std::hypot(x.uncertainty, x.reference_uncertainty));
            x.match = std::abs(x.difference) <= x.tolerance;
        }
        out.push_back(x);
    }
    return out;
}

SummaryStatistics summary_statistics(const std::vector<MeasurementRecord> &records) {
    SummaryStatistics s;
    std::vector<double> values;
    bool weighted = !records.empty();
    double wsum = 0.0;
    double wx = 0.0;
    for (const auto &r : records) {
        values.push_back(r.value);
        if (r.uncertainty > 0.0) {
            const double w = 1.0 / (r.uncertainty * r.uncertainty);
            wsum += w;
            wx += w * r.value;
        } else {
            weighted = false;
        }
    }
    s.count = values.size();
    if (values.empty()) {
        return s;
    }
    s.mean = mean_of(values);
    s.standard_error = standard_error_of(values, s.mean);
    if (weighted) {
        s.weighted_mean = wx / wsum;
        s.weighted_standard_error = 1.0 / std::sqrt(wsum);
    }
    return s;
}

EdgeTableCheck check_edge_table(const std::vector<MeasurementRecord> &records, const ExclusivityGraph &g) {
    EdgeTableCheck c;
    std::set<std::pair<int, int>> seen;
    for (const auto &r : records) {
        if (r.quantity != Quantity::kEdgeProbability) {
            continue;
        }
        ++c.records;
        bool edge = false;
        try {
            edge = g.adjacent(g.index_of(r.i), g.index_of(r.j));
        } catch (const std::exception &) {
            edge = false;
        }
        if (!edge) {
            c.unmatched.emplace_back(r.i, r.j);
        }
        if (!seen.insert({r.i, r.j}).second) {
            c.duplicates.emplace_back(r.i, r.j);
        }
    }
    for (const auto &[u, v] : g.edges()) {
        const int a = g.label(u);
        const int b = g.label(v);
        if (!seen.count({a, b})) {
            c.missing.emplace_back(a, b);
        }
        if (!seen.count({b, a})) {
            c.missing.emplace_back(b, a);
        }
    }
    std::sort(c.missing.begin(), c.missing.end());
    return c;
}

}  // namespace ks18
