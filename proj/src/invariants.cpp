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

#include "ks18/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "ks18/lp.hpp"

namespace ks18 {

namespace {

std::size_t lowest(VertexMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }
std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

class IndependenceSearch {
   public:
    explicit IndependenceSearch(const ExclusivityGraph &g) : g_(g) {}

    IndependenceResult run() {
        recurse(0, 0, g_.all_vertices());
        IndependenceResult r;
        r.alpha = best_size_;
        r.witness = mask_members(best_);
        r.nodes = nodes_;
        return r;
    }

   private:
    // Greedy partition of `cand` into cliques; an independent set meets each
    // clique at most once.
    std::size_t clique_cover_bound(VertexMask cand) const {
        std::size_t cliques = 0;
        while (cand != 0) {
            VertexMask open = cand;
            while (open != 0) {
                const std::size_t v = lowest(open);
                cand &= ~bit(v);
                open &= g_.neighbors(v) & ~bit(v);
            }
            ++cliques;
        }
        return cliques;
    }

    void recurse(VertexMask current, std::size_t size, VertexMask cand) {
        ++nodes_;
        if (cand == 0) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = current;
            }
            return;
        }
        if (size + clique_cover_bound(cand) <= best_size_) {
            return;
        }
        const std::size_t v = lowest(cand);
        recurse(current | bit(v), size + 1, cand & ~bit(v) & ~g_.neighbors(v));
        recurse(current, size, cand & ~bit(v));
    }

    const ExclusivityGraph &g_;
    VertexMask best_ = 0;
    std::size_t best_size_ = 0;
    std::uint64_t nodes_ = 0;
};

void bron_kerbosch(const ExclusivityGraph &g, VertexMask r, VertexMask p, VertexMask x, std::vector<VertexMask> &out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // Tomita pivot: the vertex of P ∪ X with most neighbours in P.
    std::size_t pivot = lowest(p | x);
    std::size_t best = 0;
    for (VertexMask px = p | x; px != 0; px &= px - 1) {
        const std::size_t u = lowest(px);
        const std::size_t c = popcount(p & g.neighbors(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (VertexMask todo = p & ~g.neighbors(pivot); todo != 0; todo &= todo - 1) {
        const std::size_t v = lowest(todo);
        bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

bool clique_order(VertexMask a, VertexMask b) {
    if (popcount(a) != popcount(b)) {
        return popcount(a) > popcount(b);
    }
    return mask_members(a) < mask_members(b);
}

}  // namespace

IndependenceResult independence_number(const ExclusivityGraph &g, std::size_t limit) {
    if (g.size() > limit) {
        throw std::invalid_argument("instance too large for exact mode");
    }
    return IndependenceSearch(g).run();
}

std::vector<VertexMask> maximal_cliques(const ExclusivityGraph &g) {
    std::vector<VertexMask> out;
    if (g.size() == 0) {
        return out;
    }
    bron_kerbosch(g, 0, g.all_vertices(), 0, out);
    std::sort(out.begin(), out.end(), clique_order);
    return out;
}

PackingResult fractional_packing(const ExclusivityGraph &g) {
    PackingResult res;
    const std::size_t n = g.size();
    if (n == 0) {
        res.exact = true;
        return res;
    }
    std::vector<VertexMask> rows;
    for (VertexMask c : maximal_cliques(g)) {
        if (popcount(c) >= 2) {
            rows.push_back(c);
        }
    }
    // Clique rows followed by the bounds w_i <= 1.
    auto build = [&](auto one) {
        using T = decltype(one);
        std::vector<std::vector<T>> a;
        for (VertexMask c : rows) {
            std::vector<T> row(n, T(0));
            for (auto v : mask_members(c)) {
                row[v] = one;
            }
            a.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<T> row(n, T(0));
            row[i] = one;
            a.push_back(std::move(row));
        }
        return a;
    };

    if (n <= kExactLpLimit) {
        const auto a = build(Rational(1));
        const std::vector<Rational> b(a.size(), Rational(1));
        const std::vector<Rational> c(n, Rational(1));
        auto sol = simplex_maximize<Rational>(a, b, c, Rational(0));
        res.exact = true;
        res.exact_value = sol.value;
        res.exact_weights = sol.x;
        res.value = sol.value.get_d();
        for (const auto &w : sol.x) {
            res.weights.push_back(w.get_d());
        }
    } else {
        const auto a = build(1.0);
        const std::vector<double> b(a.size(), 1.0);
        const std::vector<double> c(n, 1.0);
        auto sol = simplex_maximize<double>(a, b, c, kTolLp);
        res.value = sol.value;
        res.weights = sol.x;
    }
    return res;
}

double packing_violation(const ExclusivityGraph &g, const std::vector<double> &w) {
    if (w.size() != g.size()) {
        throw std::invalid_argument("weight vector size mismatch");
    }
    double worst = -1.0;
    for (double x : w) {
        worst = std::max({worst, -x, x - 1.0});
    }
    for (VertexMask c : maximal_cliques(g)) {
        double s = 0.0;
        for (auto v : mask_members(c)) {
            s += w[v];
        }
        worst = std::max(worst, s - 1.0);
    }
    return worst;
}

double theta_certificate_value(const ExclusivityGraph &g, const ThetaCertificate &cert, double tol) {
    if (cert.vectors.size() != g.size()) {
        throw std::invalid_argument("certificate has wrong number of vectors");
    }
    for (auto [a, b] : g.edges()) {
        const auto overlap = cert.vectors[a].amplitudes().dot(cert.vectors[b].amplitudes());
        if (std::abs(overlap) > tol) {
            throw std::invalid_argument("certificate vectors of adjacent vertices " + std::to_string(g.label(a)) +
                                        " and " + std::to_string(g.label(b)) + " are not orthogonal");
        }
    }
    double value = 0.0;
    for (const auto &v : cert.vectors) {
        value += std::norm(cert.handle.amplitudes().dot(v.amplitudes()));
    }
    return value;
}

std::string to_string(ThetaMethod m) { return m == ThetaMethod::kCertificate ? "certificate" : "sdp"; }

ThetaResult lovasz_theta(const ExclusivityGraph &g, const ThetaCertificate *cert, ThetaOptions opts) {
    ThetaResult r;
    if (cert != nullptr) {
        r.lower = theta_certificate_value(g, *cert);
        r.upper = fractional_packing(g).value;
        if (r.upper - r.lower <= opts.tol) {
            r.theta = r.lower;
            r.method = ThetaMethod::kCertificate;
            return r;
        }
    }
    if (!opts.allow_sdp) {
        throw std::runtime_error("theta undetermined");
    }
    if (g.size() > kSdpLimit) {
        throw std::invalid_argument("instance too large for the theta SDP");
    }
    SdpResult sdp = lovasz_theta_sdp(g);
    if (!sdp.converged) {
        throw std::runtime_error("theta SDP did not converge");
    }
    r.method = ThetaMethod::kSdp;
    r.theta = sdp.value;
    r.lower = sdp.primal;
    r.upper = sdp.dual;
    r.sdp = std::move(sdp);
    return r;
}

std::string to_string(Minimality m) { return m == Minimality::kProven ? "proven" : "upper-bound-only"; }

namespace {

class CoverSearch {
   public:
    using Clock = std::chrono::steady_clock;

    CoverSearch(const ExclusivityGraph &complement, std::vector<VertexMask> candidates, Clock::time_point deadline)
        : h_(complement), cands_(std::move(candidates)), deadline_(deadline) {
        for (VertexMask c : cands_) {
            omega_ = std::max(omega_, popcount(c));
        }
    }

    using Uncovered = std::array<VertexMask, kMaxVertices>;

    Uncovered all_edges() const {
        Uncovered u{};
        for (std::size_t v = 0; v < h_.size(); ++v) {
            u[v] = h_.neighbors(v);
        }
        return u;
    }

    static std::size_t covers(const Uncovered &u, VertexMask c) {
        std::size_t k = 0;
        for (VertexMask rest = c; rest != 0; rest &= rest - 1) {
            k += popcount(u[lowest(rest)] & c);
        }
        return k / 2;
    }

    static void apply(Uncovered &u, VertexMask c) {
        for (VertexMask rest = c; rest != 0; rest &= rest - 1) {
            u[lowest(rest)] &= ~c;
        }
    }

    std::size_t edge_count(const Uncovered &u) const {
        std::size_t twice = 0;
        for (std::size_t v = 0; v < h_.size(); ++v) {
            twice += popcount(u[v]);
        }
        return twice / 2;
    }

    std::size_t lower_bound(const Uncovered &u) const {
        const std::size_t e = edge_count(u);
        if (e == 0) {
            return 0;
        }
        const std::size_t per_clique = omega_ * (omega_ - 1) / 2;
        const std::size_t by_edges = (e + per_clique - 1) / per_clique;
        // A clique through v covers at most omega-1 of v's edges and
        // touches at most omega vertices.
        std::size_t incidences = 0;
        for (std::size_t v = 0; v < h_.size(); ++v) {
            incidences += (popcount(u[v]) + omega_ - 2) / (omega_ - 1);
        }
        const std::size_t by_degree = (incidences + omega_ - 1) / omega_;
        return std::max(by_edges, by_degree);
    }

    std::vector<VertexMask> greedy() const {
        Uncovered u = all_edges();
        std::vector<VertexMask> out;
        while (edge_count(u) > 0) {
            std::size_t best = 0;
            VertexMask pick = 0;
            for (VertexMask c : cands_) {
                const std::size_t k = covers(u, c);
                if (k > best) {
                    best = k;
                    pick = c;
                }
            }
            apply(u, pick);
            out.push_back(pick);
        }
        return out;
    }

    /// Returns false when the deadline interrupted the search.
    bool improve(std::vector<VertexMask> &best) {
        best_ = best;
        std::vector<VertexMask> chosen;
        timed_out_ = false;
        recurse(all_edges(), chosen);
        best = best_;
        return !timed_out_;
    }

    std::uint64_t nodes() const { return nodes_; }

   private:
    void recurse(const Uncovered &u, std::vector<VertexMask> &chosen) {
        if (timed_out_) {
            return;
        }
        ++nodes_;
        if ((nodes_ & 255U) == 0 && Clock::now() > deadline_) {
            timed_out_ = true;
            return;
        }
        if (edge_count(u) == 0) {
            if (chosen.size() < best_.size()) {
                best_ = chosen;
            }
            return;
        }
        if (chosen.size() + lower_bound(u) >= best_.size()) {
            return;
        }
        // Branch on the uncovered edge with the fewest covering candidates.
        std::vector<VertexMask> branch;
        bool first = true;
        for (std::size_t a = 0; a < h_.size(); ++a) {
            for (VertexMask rest = u[a] & ~((bit(a) << 1) - 1); rest != 0; rest &= rest - 1) {
                const VertexMask pair = bit(a) | bit(lowest(rest));
                std::vector<VertexMask> options;
                for (VertexMask c : cands_) {
                    if ((c & pair) == pair) {
                        options.push_back(c);
                    }
                }
                if (first || options.size() < branch.size()) {
                    branch = std::move(options);
                    first = false;
                }
            }
        }
        std::stable_sort(branch.begin(), branch.end(),
                         [&](VertexMask x, VertexMask y) { return covers(u, x) > covers(u, y); });
        for (VertexMask c : branch) {
            Uncovered next = u;
            apply(next, c);
            chosen.push_back(c);
            recurse(next, chosen);
            chosen.pop_back();
            if (timed_out_) {
                return;
            }
        }
    }

    const ExclusivityGraph &h_;
    std::vector<VertexMask> cands_;
    Clock::time_point deadline_;
    std::size_t omega_ = 0;
    std::vector<VertexMask> best_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

}  // namespace

CoverResult clique_edge_cover_complement(const ExclusivityGraph &g, std::chrono::milliseconds budget) {
    CoverResult res;
    const ExclusivityGraph h = g.complement();
    if (h.edge_count() == 0) {
        res.minimal = Minimality::kProven;
        return res;
    }
    std::vector<VertexMask> cands;
    for (VertexMask c : maximal_cliques(h)) {
        if (popcount(c) >= 2) {
            cands.push_back(c);
        }
    }
    const auto deadline = CoverSearch::Clock::now() + budget;
    CoverSearch search(h, cands, deadline);
    std::vector<VertexMask> best = search.greedy();
    res.lower_bound = search.lower_bound(search.all_edges());
    if (budget.count() > 0) {
        bool complete = best.size() == res.lower_bound || search.improve(best);
        res.minimal = complete ? Minimality::kProven : Minimality::kUpperBoundOnly;
        res.nodes = search.nodes();
    }
    std::sort(best.begin(), best.end(), [](VertexMask a, VertexMask b) { return mask_members(a) < mask_members(b); });
    res.cover.cliques = std::move(best);
    return res;
}

std::string validate_cover(const ExclusivityGraph &g, const CliqueEdgeCover &cover) {
    std::vector<VertexMask> covered(g.size(), 0);
    for (VertexMask c : cover.cliques) {
        if ((c & ~g.all_vertices()) != 0) {
            return "clique references a vertex outside the graph";
        }
        if (!g.is_independent(c)) {
            return "clique is not independent in the graph";
        }
        for (auto v : mask_members(c)) {
            covered[v] |= c & ~bit(v);
        }
    }
    const ExclusivityGraph h = g.complement();
    for (auto [a, b] : h.edges()) {
        if ((covered[a] & bit(b)) == 0) {
            return "complement edge {" + std::to_string(g.label(a)) + "," + std::to_string(g.label(b)) +
                   "} is not covered";
        }
    }
    return {};
}

GapReport classical_quantum_gap(const ExclusivityGraph &g, const ThetaCertificate *cert) {
    GapReport r;
    r.n = g.size();
    r.alpha = independence_number(g).alpha;
    r.alpha_star = fractional_packing(g).value;
    r.theta = lovasz_theta(g, cert).theta;
    if (r.n > 0) {
        r.alpha_over_n = static_cast<double>(r.alpha) / static_cast<double>(r.n);
        r.theta_over_n = r.theta / static_cast<double>(r.n);
    }
    return r;
}

}  // namespace ks18
