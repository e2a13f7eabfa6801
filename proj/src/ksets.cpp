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

#include "ks18/ksets.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace ks18 {

std::vector<KsVector> ks18_vectors() {
    return {
        {1, {1, 0, 0, 0}},    {2, {0, 1, 0, 0}},   {3, {0, 0, 1, 1}},    {4, {0, 0, 1, -1}},
        {5, {1, -1, 0, 0}},   {6, {1, 1, -1, -1}}, {7, {1, 1, 1, 1}},    {8, {1, -1, 1, -1}},
        {9, {1, 0, -1, 0}},   {10, {0, 1, 0, -1}}, {11, {1, 0, 1, 0}},   {12, {1, 1, -1, 1}},
        {13, {-1, 1, 1, 1}},  {14, {1, 1, 1, -1}}, {15, {1, 0, 0, 1}},   {16, {0, 1, -1, 0}},
        {17, {0, 1, 1, 0}},   {18, {0, 0, 0, 1}},
    };
}

std::vector<KsVector> extra_vectors() {
    // Coordinates in the ordered basis {H+2, H-2, V+2, V-2}.
    return {
        {19, {0, 0, 1, 0}},   // |V,+2>
        {20, {1, 1, 0, 0}},   // |H,h>
        {21, {0, 1, 0, 1}},   // |A,-2>
        {22, {1, -1, -1, 1}}, // |D,v>
        {23, {1, -1, 1, 1}},  // (|A,+2> - |D,-2>)/sqrt2
        {24, {1, 0, 0, -1}},  // psi_2
    };
}

namespace {

long dot(const std::vector<long> &a, const std::vector<long> &b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

void collect_cliques(const ExclusivityGraph &g, VertexMask current, VertexMask candidates, std::size_t remaining,
                     std::vector<VertexMask> &out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (VertexMask c = candidates; c != 0; c &= c - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(c));
        // only vertices above v stay candidates, so each clique appears once
        const VertexMask above = ~((bit(v) << 1) - 1);
        collect_cliques(g, current | bit(v), candidates & g.neighbors(v) & above, remaining - 1, out);
    }
}

}  // namespace

ExclusivityGraph orthogonality_graph(const std::vector<KsVector> &vectors) {
    std::vector<int> labels;
    for (const auto &v : vectors) {
        if (std::all_of(v.components.begin(), v.components.end(), [](long x) { return x == 0; })) {
            throw std::invalid_argument("degenerate vector");
        }
        if (v.components.size() != vectors.front().components.size()) {
            throw std::invalid_argument("vectors of unequal dimension");
        }
        labels.push_back(v.id);
    }
    ExclusivityGraph g(std::move(labels));
    for (std::size_t a = 0; a < vectors.size(); ++a) {
        for (std::size_t b = a + 1; b < vectors.size(); ++b) {
            if (dot(vectors[a].components, vectors[b].components) == 0) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

std::vector<Basis> find_bases(const ExclusivityGraph &g, const std::vector<KsVector> &vectors) {
    if (vectors.empty()) {
        return {};
    }
    const std::size_t d = vectors.front().components.size();
    std::vector<VertexMask> cliques;
    collect_cliques(g, 0, g.all_vertices(), d, cliques);

    std::vector<Projector> projectors;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto it = std::find_if(vectors.begin(), vectors.end(), [&](const KsVector &v) { return v.id == g.label(i); });
        if (it == vectors.end()) {
            throw std::invalid_argument("graph vertex without a vector");
        }
        projectors.push_back(it->projector());
    }

    const QMatrix id = QMatrix::identity(d);
    std::vector<Basis> out;
    for (VertexMask c : cliques) {
        QMatrix sum(d);
        Basis b;
        for (auto v : mask_members(c)) {
            sum = sum + projectors[v].exact();
            b.members.push_back(g.label(v));
        }
        if (sum == id) {
            std::sort(b.members.begin(), b.members.end());
            out.push_back(std::move(b));
        }
    }
    std::sort(out.begin(), out.end(), [](const Basis &x, const Basis &y) { return x.members < y.members; });
    return out;
}

ThetaCertificate ks18_theta_certificate(const PureState &handle) {
    std::vector<PureState> vectors;
    for (const auto &v : ks18_vectors()) {
        ComplexVector a(static_cast<Eigen::Index>(v.components.size()));
        for (std::size_t i = 0; i < v.components.size(); ++i) {
            a(static_cast<Eigen::Index>(i)) = static_cast<double>(v.components[i]);
        }
        vectors.emplace_back(std::move(a));
    }
    return ThetaCertificate{handle, std::move(vectors)};
}

HermitianOperator operator_completeness(const std::vector<KsVector> &vectors) {
    if (vectors.empty()) {
        throw std::invalid_argument("empty vector set");
    }
    QMatrix sum(vectors.front().components.size());
    for (const auto &v : vectors) {
        sum = sum + v.projector().exact();
    }
    return HermitianOperator(std::move(sum));
}

namespace {

class ColoringSearch {
   public:
    ColoringSearch(const ExclusivityGraph &g, const std::vector<Basis> &bases) : g_(g), value_(g.size(), -1) {
        for (const auto &b : bases) {
            std::vector<std::size_t> idx;
            for (int label : b.members) {
                idx.push_back(g.index_of(label));
            }
            bases_.push_back(std::move(idx));
        }
        member_of_.resize(g.size());
        for (std::size_t k = 0; k < bases_.size(); ++k) {
            for (auto v : bases_[k]) {
                member_of_[v].push_back(k);
            }
        }
        order_.resize(g.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    }

    ColoringResult run() {
        ColoringResult r;
        // Empty bases can never receive their required 1.
        for (const auto &b : bases_) {
            if (b.empty()) {
                return r;
            }
        }
        bool ok = search(0);
        r.satisfiable = ok;
        if (ok) {
            for (std::size_t v = 0; v < g_.size(); ++v) {
                r.assignment[g_.label(v)] = value_[v] == 1 ? 1 : 0;
            }
        }
        r.stats.nodes = nodes_;
        r.stats.backtracks = backtracks_;
        return r;
    }

   private:
    bool assign(std::size_t v, int val, std::vector<std::size_t> &trail) {
        std::vector<std::pair<std::size_t, int>> queue{{v, val}};
        while (!queue.empty()) {
            auto [u, x] = queue.back();
            queue.pop_back();
            if (value_[u] != -1) {
                if (value_[u] != x) {
                    return false;
                }
                continue;
            }
            value_[u] = static_cast<signed char>(x);
            trail.push_back(u);
            if (x == 1) {
                for (auto w : mask_members(g_.neighbors(u))) {
                    queue.emplace_back(w, 0);
                }
                for (auto k : member_of_[u]) {
                    for (auto w : bases_[k]) {
                        if (w != u) {
                            queue.emplace_back(w, 0);
                        }
                    }
                }
            } else {
                for (auto k : member_of_[u]) {
                    std::size_t unknown = 0;
                    std::size_t last = 0;
                    bool has_one = false;
                    for (auto w : bases_[k]) {
                        if (value_[w] == 1) {
                            has_one = true;
                        } else if (value_[w] == -1) {
                            ++unknown;
                            last = w;
                        }
                    }
                    if (has_one) {
                        continue;
                    }
                    if (unknown == 0) {
                        return false;
                    }
                    if (unknown == 1) {
                        queue.emplace_back(last, 1);
                    }
                }
            }
        }
        return true;
    }

    void undo(std::vector<std::size_t> &trail) {
        for (auto v : trail) {
            value_[v] = -1;
        }
        trail.clear();
    }

    bool search(std::size_t pos) {
        while (pos < order_.size() && value_[order_[pos]] != -1) {
            ++pos;
        }
        if (pos == order_.size()) {
            return true;
        }
        ++nodes_;
        const std::size_t v = order_[pos];
        for (int val : {1, 0}) {
            std::vector<std::size_t> trail;
            if (assign(v, val, trail) && search(pos + 1)) {
                return true;
            }
            undo(trail);
            ++backtracks_;
        }
        return false;
    }

    const ExclusivityGraph &g_;
    std::vector<std::vector<std::size_t>> bases_;
    std::vector<std::vector<std::size_t>> member_of_;
    std::vector<std::size_t> order_;
    std::vector<signed char> value_;
    std::uint64_t nodes_ = 0;
    std::uint64_t backtracks_ = 0;
};

KsCatalogEntry pure_entry(const KsVector &v, std::string description) {
    Projector p = v.projector();
    return KsCatalogEntry{"v" + std::to_string(v.id), std::move(description), v.components, p.exact(),
                          DensityMatrix(p.matrix())};
}

KsCatalogEntry mixture_entry(int id, const Rational &w_first, const Rational &w_rest, std::string description) {
    // psi_1 = v15, psi_2 = v24, psi_3 = v16, psi_4 = v17
    const std::vector<std::vector<long>> psi = {{1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, -1, 0}, {0, 1, 1, 0}};
    QMatrix rho(4);
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const Rational &w = j == 0 ? w_first : w_rest;
        rho = rho + QComplex(w) * projector_from_vector(psi[j]).exact();
    }
    ComplexMatrix d = to_eigen(rho);
    return KsCatalogEntry{"rho" + std::to_string(id), std::move(description), std::nullopt, std::move(rho),
                          DensityMatrix(std::move(d))};
}

}  // namespace

ColoringResult verify_ks_uncolorability(const ExclusivityGraph &g, const std::vector<Basis> &bases) {
    const auto start = std::chrono::steady_clock::now();
    ColoringSearch search(g, bases);
    ColoringResult r = search.run();
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

const std::vector<KsCatalogEntry> &state_catalog() {
    static const std::vector<KsCatalogEntry> catalog = [] {
        const char *kets[] = {
            "|H,+2>", "|H,-2>", "|V,h>", "|V,v>", "|H,v>", "|D,h>", "|A,h>", "|A,v>",
            "|D,+2>", "|D,-2>", "|A,+2>", "(|D,+2>+|A,-2>)/sqrt2", "(|A,-2>-|D,+2>)/sqrt2",
            "(|A,+2>+|D,-2>)/sqrt2", "psi_1=(|H,+2>+|V,-2>)/sqrt2", "psi_3=(|H,-2>-|V,+2>)/sqrt2",
            "psi_4=(|H,-2>+|V,+2>)/sqrt2", "|V,-2>", "|V,+2>", "|H,h>", "|A,-2>", "|D,v>",
            "(|A,+2>-|D,-2>)/sqrt2", "psi_2=(|H,+2>-|V,-2>)/sqrt2",
        };
        std::vector<KsCatalogEntry> out;
        std::size_t k = 0;
        for (const auto &v : ks18_vectors()) {
            out.push_back(pure_entry(v, kets[k++]));
        }
        for (const auto &v : extra_vectors()) {
            out.push_back(pure_entry(v, kets[k++]));
        }
        out.push_back(mixture_entry(25, Rational(13, 16), Rational(1, 16), "13/16 psi_1 + 1/16 (psi_2+psi_3+psi_4)"));
        out.push_back(mixture_entry(26, Rational(5, 8), Rational(1, 8), "5/8 psi_1 + 1/8 (psi_2+psi_3+psi_4)"));
        out.push_back(mixture_entry(27, Rational(7, 16), Rational(3, 16), "7/16 psi_1 + 3/16 (psi_2+psi_3+psi_4)"));
        out.push_back(mixture_entry(28, Rational(1, 4), Rational(1, 4), "1/4 (psi_1+psi_2+psi_3+psi_4)"));
        return out;
    }();
    return catalog;
}

std::string normalize_state_code(const std::string &code) {
    std::string s;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(code[i]);
        if (c == '_' || c == '{' || c == '}' || std::isspace(c)) {
            continue;
        }
        s += static_cast<char>(std::tolower(c));
    }
    const std::string greek_rho = "\xcf\x81";  // UTF-8 for the Greek letter rho
    if (s.rfind(greek_rho, 0) == 0) {
        s = "rho" + s.substr(greek_rho.size());
    }
    return s;
}

const KsCatalogEntry &catalog_entry(const std::string &code) {
    const std::string key = normalize_state_code(code);
    for (const auto &e : state_catalog()) {
        if (e.code == key) {
            return e;
        }
    }
    throw std::invalid_argument("unknown state code " + code);
}

}  // namespace ks18
