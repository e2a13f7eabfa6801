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

#include "ks18/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ks18/certify.hpp"
#include "ks18/classical.hpp"
#include "ks18/datasets.hpp"
#include "ks18/invariants.hpp"
#include "ks18/ksets.hpp"
#include "ks18/quantum.hpp"
#include "ks18/report.hpp"

namespace ks18 {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format;
    std::uint64_t seed = 1;
    double tolerance = 1e-12;
    std::string data;
    std::string out;
    std::string dump_fixtures;
};

struct Result {
    std::string text;
    int code = kExitOk;
    std::string message;  // written to stderr when non-empty
};

std::string pick_format(const Globals &g, const std::string &fallback, std::initializer_list<const char *> allowed,
                        const char *command) {
    const std::string f = g.format.empty() ? fallback : g.format;
    for (const char *a : allowed) {
        if (f == a) {
            return f;
        }
    }
    throw UsageError(std::string(command) + ": format '" + f + "' is not supported");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw UsageError("cannot write " + path);
    }
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Json labels_of(const ExclusivityGraph &g, VertexMask m) {
    Json a = Json::array();
    for (std::size_t v : mask_members(m)) {
        a.push_back(g.label(v));
    }
    return a;
}

std::chrono::milliseconds parse_budget(const std::string &s) {
    static const std::regex re(R"(^\s*(\d+(?:\.\d+)?)\s*(ms|s|m)?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) {
        throw UsageError("malformed budget '" + s + "' (expected e.g. 60s, 500ms, 0s)");
    }
    const double v = std::stod(m[1].str());
    const std::string unit = m[2].matched ? m[2].str() : "s";
    const double ms = unit == "ms" ? v : unit == "m" ? v * 60000.0 : v * 1000.0;
    return std::chrono::milliseconds(static_cast<long long>(std::llround(ms)));
}

GraphInput input_graph(const std::string &path) {
    if (path.empty()) {
        return ks18_input();
    }
    try {
        return load_graph_file(path);
    } catch (const std::runtime_error &e) {
        throw UsageError(e.what());
    }
}

// ---------------------------------------------------------------- graph

struct GraphOptions {
    bool check_table_v = false;
    std::string graph;
};

Result cmd_graph(const Globals &g, const GraphOptions &o) {
    if (g.format.empty() && !o.check_table_v && o.graph.empty() && g.out.empty()) {
        throw UsageError("graph: nothing to do (try --format json or --check-table-v)");
    }
    const GraphInput in = input_graph(o.graph);
    Result r;
    if (o.check_table_v) {
        const auto fmt = pick_format(g, "json", {"json", "text"}, "graph");
        const auto records = g.data.empty() ? load_table("table5") : load_table(g.data);
        const auto check = check_edge_table(records, in.graph);
        auto pairs = [](const std::vector<std::pair<int, int>> &ps) {
            Json a = Json::array();
            for (const auto &[i, j] : ps) {
                a.push_back({i, j});
            }
            return a;
        };
        if (fmt == "json") {
            Json j;
            j["records"] = check.records;
            j["unmatched"] = pairs(check.unmatched);
            j["duplicates"] = pairs(check.duplicates);
            j["missing"] = pairs(check.missing);
            r.text = dump_json(j);
        } else {
            std::ostringstream s;
            s << "records " << check.records << "\nunmatched " << check.unmatched.size() << "\n";
            for (const auto &[i, j] : check.duplicates) {
                s << "duplicate p_{" << i << "," << j << "}\n";
            }
            for (const auto &[i, j] : check.missing) {
                s << "missing p_{" << i << "," << j << "}\n";
            }
            r.text = s.str();
        }
        if (!check.unmatched.empty()) {
            r.code = kExitFailure;
            r.message = std::to_string(check.unmatched.size()) + " directed pairs are not edges";
        }
        return r;
    }
    const auto fmt = pick_format(g, "json", {"json", "text"}, "graph");
    const Json j = ks_set_json(in);
    if (fmt == "json") {
        r.text = dump_json(j);
    } else {
        std::ostringstream s;
        s << "vertices " << j["counts"]["vertices"] << "\nedges " << j["counts"]["edges"] << "\nbases "
          << j["counts"]["bases"] << "\ndegree " << j["degree"]["min"] << ".." << j["degree"]["max"] << "\n";
        for (const auto &d : j["discrepancies"]) {
            s << "discrepancy " << d.dump() << "\n";
        }
        r.text = s.str();
    }
    return r;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string graph;
    std::optional<int> drop_basis;
};

struct Certificate {
    std::string name;
    bool ok = false;
    std::string detail;
};

Result cmd_verify(const Globals &g, const VerifyOptions &o) {
    const auto fmt = pick_format(g, "text", {"json", "text"}, "verify");
    GraphInput in = input_graph(o.graph);
    if (o.drop_basis) {
        const int k = *o.drop_basis;
        if (k < 1 || static_cast<std::size_t>(k) > in.bases.size()) {
            throw UsageError("--drop-basis must lie in 1.." + std::to_string(in.bases.size()));
        }
        in.bases.erase(in.bases.begin() + (k - 1));
    }
    std::vector<Certificate> certs;

    const auto coloring = verify_ks_uncolorability(in.graph, in.bases);
    {
        Certificate c{"uncolorability", !coloring.satisfiable, ""};
        if (coloring.satisfiable) {
            std::string ones;
            for (const auto &[label, v] : coloring.assignment) {
                if (v == 1) {
                    ones += (ones.empty() ? "" : ",") + std::to_string(label);
                }
            }
            c.detail = "assignment found (yes on {" + ones + "})";
        } else {
            c.detail = "UNSAT over " + std::to_string(in.bases.size()) + " bases, " +
                       std::to_string(coloring.stats.nodes) + " nodes";
        }
        certs.push_back(c);
    }

    if (in.vectors && !in.vectors->empty()) {
        const auto sum = operator_completeness(*in.vectors).exact();
        const std::size_t d = sum.dim();
        const Rational factor(static_cast<long>(in.vectors->size()), static_cast<long>(d));
        Rational f = factor;
        f.canonicalize();
        const bool ok = sum == QComplex(f) * QMatrix::identity(d);
        certs.push_back({"completeness", ok,
                         ok ? "sum of projectors = " + f.get_str() + " I" : "sum of projectors is not a multiple of I"});
    }

    if (o.graph.empty()) {
        std::string signs;
        bool ok = true;
        for (const auto &ctx : ks_contexts()) {
            const auto &ids = ctx.ids();
            const QMatrix prod =
                observable(ids[0]).op.exact() * observable(ids[1]).op.exact() * observable(ids[2]).op.exact();
            const QMatrix id = QMatrix::identity(4);
            const bool plus = prod == id;
            const bool minus = prod == QComplex(-1) * id;
            const bool expect_minus = ctx.label() == "258";
            ok = ok && (expect_minus ? minus : plus);
            signs += (signs.empty() ? "" : " ") + ctx.label() + (plus ? "=+I" : minus ? "=-I" : "=?");
        }
        certs.push_back({"parity", ok, signs});

        try {
            const auto map = proposition_vertex_map();
            const auto omitted = omitted_outcome_map();
            bool omitted_ok = omitted.size() == 6;
            for (std::size_t k = 0; k < omitted.size(); ++k) {
                omitted_ok = omitted_ok && omitted[k].vertex >= 19 && omitted[k].vertex <= 24;
            }
            certs.push_back({"correspondence", map.size() == 18,
                             "bijection of size " + std::to_string(map.size()) + " between propositions and vertices"});
            certs.push_back({"omitted outcomes", omitted_ok, "6 parity-allowed omitted outcomes map to v19..v24"});
        } catch (const std::exception &e) {
            certs.push_back({"correspondence", false, e.what()});
        }
    }

    Result r;
    bool all = true;
    std::string failed;
    for (const auto &c : certs) {
        all = all && c.ok;
        if (!c.ok && failed.empty()) {
            failed = c.name + " (" + c.detail + ")";
        }
    }
    if (fmt == "json") {
        Json j;
        Json arr = Json::array();
        for (const auto &c : certs) {
            arr.push_back({{"detail", c.detail}, {"name", c.name}, {"ok", c.ok}});
        }
        j["certificates"] = arr;
        j["ok"] = all;
        r.text = dump_json(j);
    } else {
        std::ostringstream s;
        for (const auto &c : certs) {
            s << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        }
        r.text = s.str();
    }
    if (!all) {
        r.code = kExitFailure;
        r.message = "verification failed: " + failed;
    }
    return r;
}

// ---------------------------------------------------------------- invariants

struct InvariantOptions {
    std::string graph;
    std::string budget = "60s";
};

Result cmd_invariants(const Globals &g, const InvariantOptions &o) {
    const auto fmt = pick_format(g, "json", {"json", "text"}, "invariants");
    const auto budget = parse_budget(o.budget);
    const GraphInput in = input_graph(o.graph);
    const auto &graph = in.graph;

    Json j;
    j["n"] = graph.size();
    j["edges"] = graph.edge_count();

    const auto alpha = independence_number(graph);
    Json witness = Json::array();
    for (std::size_t v : alpha.witness) {
        witness.push_back(graph.label(v));
    }
    j["alpha"] = alpha.alpha;
    j["alpha_witness"] = witness;

    const auto packing = fractional_packing(graph);
    j["alpha_star"] = json_number(packing.value);
    if (packing.exact) {
        Rational v = packing.exact_value;
        v.canonicalize();
        j["alpha_star_exact"] = v.get_str();
        Json w = Json::array();
        for (auto x : packing.exact_weights) {
            x.canonicalize();
            w.push_back(x.get_str());
        }
        j["alpha_star_weights"] = w;
    }

    std::optional<ThetaCertificate> cert;
    if (o.graph.empty()) {
        ComplexVector handle(4);
        handle << 1.0, 0.0, 0.0, 0.0;
        cert = ks18_theta_certificate(PureState(handle));
    }
    const auto theta = lovasz_theta(graph, cert ? &*cert : nullptr);
    j["theta"] = json_number(theta.theta);
    j["theta_method"] = to_string(theta.method);
    j["theta_bounds"] = {json_number(theta.lower), json_number(theta.upper)};
    std::optional<SdpResult> sdp = theta.sdp;
    if (!sdp && graph.size() <= kSdpLimit) {
        sdp = lovasz_theta_sdp(graph);
    }
    if (sdp) {
        j["theta_sdp"] = {{"converged", sdp->converged},
                          {"dual", json_number(sdp->dual)},
                          {"gap_below_1e-6", sdp->gap < kTolSdp},
                          {"iterations", sdp->iterations},
                          {"primal", json_number(sdp->primal)},
                          {"value", json_number(sdp->value)}};
    }

    const auto cover = clique_edge_cover_complement(graph, budget);
    Json cliques = Json::array();
    for (VertexMask m : cover.cover.cliques) {
        cliques.push_back(labels_of(graph, m));
    }
    const std::string invalid = validate_cover(graph, cover.cover);
    j["cover"] = {{"cliques", cliques},
                  {"lower_bound", cover.lower_bound},
                  {"minimality", to_string(cover.minimal)},
                  {"size", cover.cover.cliques.size()},
                  {"valid", invalid.empty()}};

    const double n = static_cast<double>(std::max<std::size_t>(graph.size(), 1));
    j["alpha_over_n"] = json_number(static_cast<double>(alpha.alpha) / n);
    j["theta_over_n"] = json_number(theta.theta / n);

    Result r;
    if (fmt == "json") {
        r.text = dump_json(j);
    } else {
        std::ostringstream s;
        s << "alpha " << alpha.alpha << "\nalpha_star " << num(packing.value) << "\ntheta " << num(theta.theta)
          << " (" << to_string(theta.method) << ")\n";
        if (j.contains("theta_sdp")) {
            s << "theta_sdp " << num(j["theta_sdp"]["value"].get<double>()) << "\n";
        }
        s << "cover " << cover.cover.cliques.size() << " (" << to_string(cover.minimal) << ", lower bound "
          << cover.lower_bound << ")\n";
        r.text = s.str();
    }
    if (!invalid.empty()) {
        r.code = kExitFailure;
        r.message = "invalid cover: " + invalid;
    }
    return r;
}

// ---------------------------------------------------------------- simulate

struct SimulateOptions {
    std::string state;
    std::string quantity = "both";
    bool terms = false;
    int random = 0;
    int mixed = 0;
    std::optional<double> visibility;
};

Result cmd_simulate(const Globals &g, const SimulateOptions &o) {
    if (o.quantity != "sigma" && o.quantity != "xi" && o.quantity != "both") {
        throw UsageError("--quantity must be sigma, xi or both");
    }
    Result r;
    if (o.random > 0 || o.mixed > 0) {
        const auto fmt = pick_format(g, "json", {"json", "text"}, "simulate");
        std::mt19937_64 rng(g.seed);
        double dev_sigma = 0.0;
        double dev_xi = 0.0;
        auto track = [&](const DensityMatrix &rho) {
            dev_sigma = std::max(dev_sigma, std::abs(sigma(rho) - 4.5));
            dev_xi = std::max(dev_xi, std::abs(xi(rho) - 4.5));
        };
        for (int k = 0; k < o.random; ++k) {
            track(DensityMatrix::from_pure(random_pure_state(rng)));
        }
        for (int k = 0; k < o.mixed; ++k) {
            track(random_mixed_state(rng));
        }
        const bool ok = dev_sigma < g.tolerance && dev_xi < g.tolerance;
        if (fmt == "json") {
            Json j;
            j["mixed_states"] = o.mixed;
            j["pure_states"] = o.random;
            j["seed"] = g.seed;
            j["tolerance"] = json_number(g.tolerance);
            j["max_abs_sigma_deviation"] = json_number(dev_sigma);
            j["max_abs_xi_deviation"] = json_number(dev_xi);
            j["ok"] = ok;
            r.text = dump_json(j);
        } else {
            r.text = "states " + std::to_string(o.random + o.mixed) + "\nmax |sigma-4.5| " + num(dev_sigma) +
                     "\nmax |xi-4.5| " + num(dev_xi) + "\n";
        }
        if (!ok) {
            r.code = kExitFailure;
            r.message = "state independence violated beyond tolerance " + num(g.tolerance);
        }
        return r;
    }
    if (o.state.empty()) {
        throw UsageError("simulate: --state or --random is required");
    }
    const auto fmt = pick_format(g, "json", {"json", "text", "csv"}, "simulate");
    const KsCatalogEntry *entry = nullptr;
    try {
        entry = &catalog_entry(o.state);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    DensityMatrix rho = entry->state;
    if (o.visibility) {
        try {
            rho = apply_noise(rho, NoiseChannel{NoiseChannel::Kind::kVisibility, *o.visibility});
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    const bool want_sigma = o.quantity != "xi";
    const bool want_xi = o.quantity != "sigma";
    std::vector<std::pair<std::string, double>> values;
    if (want_sigma) {
        values.emplace_back("sigma", sigma(rho));
    }
    if (want_xi) {
        values.emplace_back("xi", xi(rho));
    }
    const auto table = o.terms ? ideal_probability_table(rho) : std::vector<std::pair<std::string, double>>{};

    if (fmt == "json") {
        Json j;
        j["state"] = entry->code;
        for (const auto &[k, v] : values) {
            j[k] = json_number(v);
        }
        if (o.visibility) {
            j["visibility"] = json_number(*o.visibility);
        }
        if (o.terms) {
            Json t;
            for (const auto &[k, v] : table) {
                t[k] = json_number(v);
            }
            j["terms"] = t;
        }
        r.text = dump_json(j);
    } else if (fmt == "csv") {
        std::ostringstream s;
        s << "key,value\n";
        for (const auto &[k, v] : table) {
            s << k << "," << num(v) << "\n";
        }
        for (const auto &[k, v] : values) {
            s << k << "," << num(v) << "\n";
        }
        r.text = s.str();
    } else {
        std::ostringstream s;
        for (const auto &[k, v] : table) {
            s << k << " " << num(v) << "\n";
        }
        for (const auto &[k, v] : values) {
            s << k << " " << num(v) << "\n";
        }
        r.text = s.str();
    }
    return r;
}

// ---------------------------------------------------------------- certify

struct CertifyOptions {
    std::string quantity = "sigma";
    std::string edges;
    std::string term_data;
    std::optional<double> epsilon;
    bool strict = false;
    std::string svg;
    std::string dedupe = "keep-all";
};

Json stats_json(const SummaryStatistics &s) {
    Json j;
    j["count"] = s.count;
    j["mean"] = json_number(s.mean);
    j["standard_error"] = json_number(s.standard_error);
    if (s.weighted_mean) {
        j["weighted_mean"] = json_number(*s.weighted_mean);
        j["weighted_standard_error"] = json_number(*s.weighted_standard_error);
    }
    return j;
}

Result cmd_certify(const Globals &g, const CertifyOptions &o) {
    const auto fmt = pick_format(g, "json", {"json", "text", "svg"}, "certify");
    if (o.quantity != "sigma" && o.quantity != "xi") {
        throw UsageError("--quantity must be sigma or xi");
    }
    if (o.dedupe != "keep-all" && o.dedupe != "keep-first") {
        throw UsageError("--dedupe must be keep-all or keep-first");
    }
    const bool is_xi = o.quantity == "xi";
    const Quantity q = is_xi ? Quantity::kXi : Quantity::kSigma;
    const auto measured = g.data.empty() ? load_table(is_xi ? "table2" : "table4", q) : load_table(g.data, q);
    const auto edges = dedupe(o.edges.empty() ? load_table("table5") : load_table(o.edges),
                              o.dedupe == "keep-first" ? Dedupe::kKeepFirst : Dedupe::kKeepAll);
    const ExclusivityGraph graph = orthogonality_graph(ks18_vectors());
    const auto estimate = estimate_epsilon(edges, &graph);
    NoiseParams params = estimate.params;
    if (o.epsilon) {
        if (!(*o.epsilon >= 0.0 && *o.epsilon < 1.0)) {
            throw UsageError("--epsilon must lie in [0,1)");
        }
        params = NoiseParams{*o.epsilon, 0.0};
    }
    const auto report = certify(measured, params);

    std::vector<XiRecomputation> recomputed;
    if (is_xi) {
        const auto terms = o.term_data.empty() ? load_table("terms") : load_table(o.term_data);
        recomputed = recompute_xi_from_terms(terms, &measured);
    }

    Json j;
    j["quantity"] = o.quantity;
    j["epsilon"] = {{"count", estimate.count},
                    {"estimated", json_number(estimate.params.epsilon)},
                    {"estimated_uncertainty", json_number(estimate.params.epsilon_uncertainty)},
                    {"mismatches", estimate.mismatches},
                    {"source", o.epsilon ? "override" : "edge table"},
                    {"value", json_number(params.epsilon)}};
    j["dedupe"] = o.dedupe;
    j["bound"] = json_number(report.bound);
    j["band"] = {json_number(report.band_min), json_number(report.band_max)};
    Rational t = report.threshold;
    j["threshold"] = {{"exact", t.get_str()},
                      {"rounded", json_number(report.rounded_threshold)},
                      {"value", json_number(t.get_d())}};
    j["gate"] = report.gate_ok;
    Json states = Json::array();
    for (const auto &s : report.states) {
        states.push_back({{"in_band", s.in_band},
                          {"measured", json_number(s.measured)},
                          {"state", s.state_code},
                          {"uncertainty", json_number(s.uncertainty)},
                          {"verdict", s.verdict}});
    }
    j["states"] = states;
    j["total"] = report.states.size();
    j["advantage_count"] = report.advantage_count;
    j["in_band_count"] = report.in_band_count;
    j["flags"] = report.flags;
    j["summary"] = stats_json(summary_statistics(measured));
    std::size_t matched = 0;
    if (is_xi) {
        Json arr = Json::array();
        for (const auto &x : recomputed) {
            matched += x.match ? 1 : 0;
            Json e = {{"difference", json_number(x.difference)},
                      {"match", x.match},
                      {"state", x.state_code},
                      {"sum", json_number(x.sum)},
                      {"tolerance", json_number(x.tolerance)},
                      {"uncertainty", json_number(x.uncertainty)}};
            if (x.reference) {
                e["reference"] = json_number(*x.reference);
            }
            arr.push_back(e);
        }
        j["recomputation"] = {{"matched", matched}, {"states", arr}, {"total", recomputed.size()}};
    }

    Result r;
    const std::string chart = band_chart_svg(report, is_xi ? "xi per state" : "Sigma per state");
    if (!o.svg.empty()) {
        write_file(o.svg, chart);
    }
    if (fmt == "json") {
        r.text = dump_json(j);
    } else if (fmt == "svg") {
        r.text = chart;
    } else {
        std::ostringstream s;
        s << "epsilon " << num(params.epsilon) << " +- " << num(params.epsilon_uncertainty) << "\n";
        s << "bound " << num(report.bound) << "\nband " << num(report.band_min) << " " << num(report.band_max) << "\n";
        s << "threshold " << t.get_str() << " (" << num(report.rounded_threshold) << ")\n";
        for (const auto &st : report.states) {
            s << st.state_code << " " << num(st.measured) << " " << st.verdict << (st.in_band ? "" : " (outside band)")
              << "\n";
        }
        s << "advantage " << report.advantage_count << "/" << report.states.size() << "\n";
        if (is_xi) {
            s << "recomputed " << matched << "/" << recomputed.size() << "\n";
        }
        r.text = s.str();
    }

    if (is_xi && matched != recomputed.size()) {
        r.code = kExitFailure;
        r.message = "xi recomputation mismatch";
    }
    if (o.strict) {
        if (!report.gate_ok) {
            r.code = kExitFailure;
            r.message = "classical bound exceeds quantum value";
        } else if (report.advantage_count != report.states.size()) {
            r.code = kExitFailure;
            r.message = std::to_string(report.states.size() - report.advantage_count) + " states without advantage";
        }
    }
    return r;
}

// ---------------------------------------------------------------- strategy

Json strategy_report_json(const StrategyReport &v, std::size_t boxes) {
    Json j;
    j["ok"] = v.ok;
    j["boxes"] = boxes;
    j["exclusivity"] = v.exclusivity;
    j["independence"] = v.independence;
    j["balanced"] = v.balanced;
    j["min_sigma"] = v.min_sigma;
    j["max_sigma"] = v.max_sigma;
    j["average_sigma"] = json_number(v.average_sigma);
    j["yes_probability"] = json_number(v.yes_probability);
    Json sizes;
    for (const auto &[t, k] : v.test_sizes) {
        sizes[std::to_string(t)] = k;
    }
    j["test_sizes"] = sizes;
    Json counts;
    for (const auto &[b, k] : v.box_counts) {
        counts[std::to_string(b)] = k;
    }
    j["box_counts"] = counts;
    j["failures"] = v.failures;
    return j;
}

Result cmd_strategy(const Globals &g, const std::string &validate) {
    const auto fmt = pick_format(g, "json", {"json", "text"}, "strategy");
    const ExclusivityGraph graph = orthogonality_graph(ks18_vectors());
    BoxStrategy s;
    if (!validate.empty()) {
        try {
            s = strategy_from_json(read_file(validate));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    } else {
        s = construct_box_strategy(graph);
    }
    const auto v = validate_box_strategy(graph, s);
    Result r;
    if (fmt == "json") {
        Json j = Json::parse(strategy_to_json(s));
        j["validation"] = strategy_report_json(v, s.boxes.size());
        r.text = dump_json(j);
    } else {
        std::ostringstream o;
        for (const auto &[b, members] : s.dual()) {
            o << "box " << b << ":";
            for (int t : members) {
                o << " " << t;
            }
            o << "\n";
        }
        o << "boxes " << s.boxes.size() << "\nsigma min " << v.min_sigma << " max " << v.max_sigma
          << "\nyes probability " << num(v.yes_probability) << "\n";
        for (const auto &f : v.failures) {
            o << "FAIL " << f << "\n";
        }
        r.text = o.str();
    }
    if (!v.ok) {
        r.code = kExitFailure;
        r.message = "strategy invalid: " + v.failures.front();
    }
    return r;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Kochen-Specker 18-test set: verification, invariants, simulation and certification", "ks18"};
    app.fallthrough();
    app.require_subcommand(0, 1);

    Globals g;
    app.add_option("--format", g.format, "Output format: json | csv | svg | text")
        ->check(CLI::IsMember({"json", "csv", "svg", "text"}));
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--tolerance", g.tolerance, "Numerical tolerance for checks")->check(CLI::PositiveNumber);
    app.add_option("--data", g.data, "Input data file (CSV)");
    app.add_option("--out", g.out, "Write the report to this file instead of stdout");
    app.add_option("--dump-fixtures", g.dump_fixtures, "Write the embedded CSV tables into a directory");

    GraphOptions graph_opts;
    auto *graph = app.add_subcommand("graph", "Emit the vectors, derived graph and bases");
    graph->add_flag("--check-table-v", graph_opts.check_table_v, "Cross-check the edge-probability table");
    graph->add_option("--graph", graph_opts.graph, "ks-set.json or edge list instead of the built-in set");

    VerifyOptions verify_opts;
    int drop_basis = 0;
    auto *verify = app.add_subcommand("verify", "Uncolorability, completeness, parity and correspondence");
    verify->add_option("--graph", verify_opts.graph, "ks-set.json instead of the built-in set");
    auto *drop = verify->add_option("--drop-basis", drop_basis, "Remove the k-th basis (1-based) before solving");

    InvariantOptions inv_opts;
    auto *invariants = app.add_subcommand("invariants", "alpha, alpha*, theta and the clique edge cover");
    invariants->add_option("--graph", inv_opts.graph, "ks-set.json or edge list instead of the built-in set");
    invariants->add_option("--budget", inv_opts.budget, "Time budget for the cover search (e.g. 60s, 0s)");

    SimulateOptions sim_opts;
    double visibility = 1.0;
    auto *simulate = app.add_subcommand("simulate", "Ideal sigma, xi and term probabilities");
    simulate->add_option("--state", sim_opts.state, "Catalog state (v1..v24, rho25..rho28)");
    simulate->add_option("--quantity", sim_opts.quantity, "sigma | xi | both");
    simulate->add_flag("--terms", sim_opts.terms, "Include the 18 term probabilities");
    simulate->add_option("--random", sim_opts.random, "Sweep this many Haar-random pure states")
        ->check(CLI::NonNegativeNumber);
    simulate->add_option("--mixed", sim_opts.mixed, "Sweep this many random mixed states")
        ->check(CLI::NonNegativeNumber);
    auto *vis = simulate->add_option("--visibility", visibility, "Apply white noise with this visibility");

    CertifyOptions cert_opts;
    double epsilon = 0.0;
    auto *certify_cmd = app.add_subcommand("certify", "Estimate noise and certify the quantum advantage");
    certify_cmd->add_option("--quantity", cert_opts.quantity, "sigma | xi");
    certify_cmd->add_option("--edges", cert_opts.edges, "Edge-probability CSV (default: embedded)");
    certify_cmd->add_option("--term-data", cert_opts.term_data, "Term-probability CSV (default: embedded)");
    auto *eps = certify_cmd->add_option("--epsilon", epsilon, "Use this noise level instead of the estimate");
    certify_cmd->add_flag("--strict", cert_opts.strict, "Exit 1 unless every state shows an advantage");
    certify_cmd->add_option("--svg", cert_opts.svg, "Write the band chart to this file");
    certify_cmd->add_option("--dedupe", cert_opts.dedupe, "keep-all | keep-first");

    std::string validate;
    auto *strategy = app.add_subcommand("strategy", "Reconstruct and validate the classical box strategy");
    strategy->add_option("--validate", validate, "Validate a strategy JSON file instead");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (!g.dump_fixtures.empty()) {
            for (const auto &p : dump_fixtures(g.dump_fixtures)) {
                err << "wrote " << p << "\n";
            }
            if (app.get_subcommands().empty()) {
                return kExitOk;
            }
        }
        Result r;
        if (graph->parsed()) {
            r = cmd_graph(g, graph_opts);
        } else if (verify->parsed()) {
            if (drop->count() > 0) {
                verify_opts.drop_basis = drop_basis;
            }
            r = cmd_verify(g, verify_opts);
        } else if (invariants->parsed()) {
            r = cmd_invariants(g, inv_opts);
        } else if (simulate->parsed()) {
            if (vis->count() > 0) {
                sim_opts.visibility = visibility;
            }
            r = cmd_simulate(g, sim_opts);
        } else if (certify_cmd->parsed()) {
            if (eps->count() > 0) {
                cert_opts.epsilon = epsilon;
            }
            r = cmd_certify(g, cert_opts);
        } else if (strategy->parsed()) {
            r = cmd_strategy(g, validate);
        } else {
            err << app.help();
            return kExitUsage;
        }
        if (g.out.empty()) {
            out << r.text;
        } else {
            write_file(g.out, r.text);
        }
        if (!r.message.empty()) {
            err << r.message << "\n";
        }
        return r.code;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace ks18
