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

#include "ks18/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ks18 {

namespace {

// Edge count quoted in the prose description of the set; the vectors give 63.
constexpr std::size_t kDocumentedEdgeCount = 42;

std::string fmt(const char *spec, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> ints(const Json &j, const char *what) {
    if (!j.is_array()) {
        throw std::invalid_argument(std::string("graph JSON: '") + what + "' must be an array");
    }
    std::vector<int> out;
    for (const auto &x : j) {
        if (!x.is_number_integer()) {
            throw std::invalid_argument(std::string("graph JSON: '") + what + "' must hold integers");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

Json json_number(double x) {
    if (!std::isfinite(x)) {
        return nullptr;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

GraphInput ks18_input() {
    GraphInput in;
    in.vectors = ks18_vectors();
    in.graph = orthogonality_graph(*in.vectors);
    in.bases = find_bases(in.graph, *in.vectors);
    return in;
}

Json ks_set_json(const GraphInput &in) {
    const auto &g = in.graph;
    Json j;
    j["vertices"] = g.labels();
    Json edges = Json::array();
    for (const auto &[u, v] : g.edges()) {
        edges.push_back({g.label(u), g.label(v)});
    }
    j["edges"] = edges;
    Json bases = Json::array();
    std::vector<int> membership(g.size(), 0);
    for (const auto &b : in.bases) {
        bases.push_back(b.members);
        for (int id : b.members) {
            ++membership[g.index_of(id)];
        }
    }
    j["bases"] = bases;
    std::size_t dmin = g.size() == 0 ? 0 : g.degree(0);
    std::size_t dmax = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        dmin = std::min(dmin, g.degree(v));
        dmax = std::max(dmax, g.degree(v));
    }
    j["degree"] = {{"max", dmax}, {"min", dmin}};
    j["basis_membership"] = membership;
    j["counts"] = {{"bases", in.bases.size()}, {"edges", g.edge_count()}, {"vertices", g.size()}};

    Json flags = Json::array();
    if (in.vectors) {
        Json vectors = Json::array();
        for (const auto &v : *in.vectors) {
            vectors.push_back({{"components", v.components}, {"id", v.id}});
        }
        j["vectors"] = vectors;
        // Every edge is an exact zero of the integer inner product.
        for (const auto &[u, v] : g.edges()) {
            long dot = 0;
            const auto &a = (*in.vectors)[u].components;
            const auto &b = (*in.vectors)[v].components;
            for (std::size_t k = 0; k < a.size(); ++k) {
                dot += a[k] * b[k];
            }
            if (dot != 0) {
                flags.push_back({{"field", "edge"}, {"edge", {g.label(u), g.label(v)}}, {"dot", dot}});
            }
        }
        if (g.size() == 18 && g.edge_count() != kDocumentedEdgeCount) {
            flags.push_back({{"derived", g.edge_count()},
                             {"documented", kDocumentedEdgeCount},
                             {"field", "edge_count"},
                             {"note", "prose edge count disagrees with the vectors; derived value is used"}});
        }
    }
    j["discrepancies"] = flags;
    return j;
}

GraphInput graph_from_json(const std::string &text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("graph JSON: expected an object");
    }
    GraphInput in;
    if (j.contains("vectors")) {
        std::vector<KsVector> vectors;
        for (const auto &v : j["vectors"]) {
            if (!v.is_object() || !v.contains("id") || !v.contains("components")) {
                throw std::invalid_argument("graph JSON: each vector needs 'id' and 'components'");
            }
            KsVector kv;
            kv.id = v["id"].get<int>();
            for (int c : ints(v["components"], "components")) {
                kv.components.push_back(c);
            }
            vectors.push_back(std::move(kv));
        }
        in.graph = orthogonality_graph(vectors);
        in.bases = find_bases(in.graph, vectors);
        in.vectors = std::move(vectors);
        return in;
    }
    if (!j.contains("vertices") || !j.contains("edges")) {
        throw std::invalid_argument("graph JSON: expected 'vectors' or 'vertices' and 'edges'");
    }
    in.graph = ExclusivityGraph(ints(j["vertices"], "vertices"));
    for (const auto &e : j["edges"]) {
        const auto pair = ints(e, "edges");
        if (pair.size() != 2) {
            throw std::invalid_argument("graph JSON: each edge needs two endpoints");
        }
        try {
            in.graph.add_edge(in.graph.index_of(pair[0]), in.graph.index_of(pair[1]));
        } catch (const std::out_of_range &) {
            throw std::invalid_argument("graph JSON: edge endpoint is not a vertex");
        }
    }
    if (j.contains("bases")) {
        for (const auto &b : j["bases"]) {
            Basis basis{ints(b, "bases")};
            std::sort(basis.members.begin(), basis.members.end());
            for (int id : basis.members) {
                try {
                    (void)in.graph.index_of(id);
                } catch (const std::out_of_range &) {
                    throw std::invalid_argument("graph JSON: basis member is not a vertex");
                }
            }
            in.bases.push_back(std::move(basis));
        }
    }
    return in;
}

GraphInput load_graph_file(const std::string &path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return graph_from_json(text);
    }
    GraphInput in;
    in.graph = ExclusivityGraph::parse_edge_list(text);
    return in;
}

std::string band_chart_svg(const CertificationReport &report, const std::string &title) {
    const double width = 960.0;
    const double height = 440.0;
    const double left = 70.0;
    const double right = 20.0;
    const double top = 40.0;
    const double bottom = 70.0;

    double lo = std::min({4.0, report.band_min, report.bound});
    double hi = std::max({4.5, report.band_max, report.bound});
    for (const auto &s : report.states) {
        lo = std::min(lo, s.measured - s.uncertainty);
        hi = std::max(hi, s.measured + s.uncertainty);
    }
    lo = std::floor(lo * 10.0 - 1.0) / 10.0;
    hi = std::ceil(hi * 10.0 + 1.0) / 10.0;

    const std::size_t n = std::max<std::size_t>(report.states.size(), 1);
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    auto x_of = [&](std::size_t i) { return left + (static_cast<double>(i) + 0.5) * plot_w / static_cast<double>(n); };
    auto y_of = [&](double v) { return top + (hi - v) / (hi - lo) * plot_h; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt("%.0f", width) << "\" height=\""
      << fmt("%.0f", height) << "\" viewBox=\"0 0 " << fmt("%.0f", width) << " " << fmt("%.0f", height)
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "  <rect x=\"0\" y=\"0\" width=\"" << fmt("%.0f", width) << "\" height=\"" << fmt("%.0f", height)
      << "\" fill=\"white\"/>\n";
    o << "  <text x=\"" << fmt("%.1f", width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title
      << "</text>\n";

    // Expected band.
    o << "  <rect class=\"band\" x=\"" << fmt("%.2f", left) << "\" y=\"" << fmt("%.2f", y_of(report.band_max))
      << "\" width=\"" << fmt("%.2f", plot_w) << "\" height=\""
      << fmt("%.2f", y_of(report.band_min) - y_of(report.band_max)) << "\" fill=\"#d62728\" fill-opacity=\"0.25\"/>\n";

    // Axes and y ticks.
    o << "  <line x1=\"" << fmt("%.2f", left) << "\" y1=\"" << fmt("%.2f", top) << "\" x2=\"" << fmt("%.2f", left)
      << "\" y2=\"" << fmt("%.2f", top + plot_h) << "\" stroke=\"black\"/>\n";
    o << "  <line x1=\"" << fmt("%.2f", left) << "\" y1=\"" << fmt("%.2f", top + plot_h) << "\" x2=\""
      << fmt("%.2f", left + plot_w) << "\" y2=\"" << fmt("%.2f", top + plot_h) << "\" stroke=\"black\"/>\n";
    const int ticks = static_cast<int>(std::lround((hi - lo) * 10.0));
    for (int t = 0; t <= ticks; ++t) {
        const double v = lo + 0.1 * t;
        o << "  <text x=\"" << fmt("%.2f", left - 6) << "\" y=\"" << fmt("%.2f", y_of(v) + 4)
          << "\" text-anchor=\"end\">" << fmt("%.1f", v) << "</text>\n";
    }
    o << "  <text x=\"18\" y=\"" << fmt("%.2f", top + plot_h / 2) << "\" transform=\"rotate(-90 18 "
      << fmt("%.2f", top + plot_h / 2) << ")\" text-anchor=\"middle\">value</text>\n";

    // Classical bound and its noise-corrected version.
    o << "  <line class=\"classical\" x1=\"" << fmt("%.2f", left) << "\" y1=\"" << fmt("%.2f", y_of(4.0))
      << "\" x2=\"" << fmt("%.2f", left + plot_w) << "\" y2=\"" << fmt("%.2f", y_of(4.0))
      << "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
    o << "  <line class=\"corrected\" x1=\"" << fmt("%.2f", left) << "\" y1=\"" << fmt("%.2f", y_of(report.bound))
      << "\" x2=\"" << fmt("%.2f", left + plot_w) << "\" y2=\"" << fmt("%.2f", y_of(report.bound))
      << "\" stroke=\"#1f77b4\" stroke-width=\"2\" stroke-dasharray=\"8 5\"/>\n";

    for (std::size_t i = 0; i < report.states.size(); ++i) {
        const auto &s = report.states[i];
        const double x = x_of(i);
        if (s.uncertainty > 0.0) {
            o << "  <line x1=\"" << fmt("%.2f", x) << "\" y1=\"" << fmt("%.2f", y_of(s.measured - s.uncertainty))
              << "\" x2=\"" << fmt("%.2f", x) << "\" y2=\"" << fmt("%.2f", y_of(s.measured + s.uncertainty))
              << "\" stroke=\"black\"/>\n";
        }
        o << "  <circle class=\"point\" cx=\"" << fmt("%.2f", x) << "\" cy=\"" << fmt("%.2f", y_of(s.measured))
          << "\" r=\"3.5\" fill=\"" << (s.in_band ? "black" : "#ff7f0e") << "\"/>\n";
        o << "  <text x=\"" << fmt("%.2f", x) << "\" y=\"" << fmt("%.2f", top + plot_h + 16)
          << "\" text-anchor=\"end\" transform=\"rotate(-60 " << fmt("%.2f", x) << " "
          << fmt("%.2f", top + plot_h + 16) << ")\">" << s.state_code << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace ks18
