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

#include "ks18/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ks18/ksets.hpp"

namespace ks18 {

namespace {

QMatrix pauli(char which) {
    const QComplex i(Rational(0), Rational(1));
    switch (which) {
        case 'I':
            return QMatrix::identity(2);
        case 'X':
            return QMatrix(2, {0, 1, 1, 0});
        case 'Y':
            return QMatrix(2, {0, -i, i, 0});
        case 'Z':
            return QMatrix(2, {1, 0, 0, -1});
        default:
            throw std::invalid_argument("unknown Pauli label");
    }
}

const std::vector<Projector> &ks_projectors() {
    static const std::vector<Projector> p = [] {
        std::vector<Projector> out;
        for (const auto &v : ks18_vectors()) {
            out.push_back(v.projector());
        }
        return out;
    }();
    return p;
}

// Numeric outcome projectors, indexed [observable][bit].
const ComplexMatrix &numeric_projector(int id, int bit) {
    static const std::vector<std::array<ComplexMatrix, 2>> cache = [] {
        std::vector<std::array<ComplexMatrix, 2>> out;
        for (const auto &obs : observables()) {
            out.push_back({outcome_projector(obs, 0).matrix(), outcome_projector(obs, 1).matrix()});
        }
        return out;
    }();
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("outcome bit must be 0 or 1");
    }
    return cache[static_cast<std::size_t>(observable(id).id)][static_cast<std::size_t>(bit)];
}

bool commute(const QMatrix &a, const QMatrix &b) { return a * b == b * a; }

ComplexMatrix luders(const ComplexMatrix &rho, const ComplexMatrix &p) { return p * rho * p; }

double real_trace(const ComplexMatrix &m) { return m.trace().real(); }

}  // namespace

const std::vector<Observable> &observables() {
    static const std::vector<Observable> obs = [] {
        const char *labels[] = {"ZI", "IZ", "ZZ", "IX", "XI", "XX", "ZX", "XZ", "YY"};
        std::vector<Observable> out;
        for (int id = 0; id < 9; ++id) {
            out.push_back(Observable{id, HermitianOperator(kron(pauli(labels[id][0]), pauli(labels[id][1])))});
        }
        return out;
    }();
    return obs;
}

const Observable &observable(int id) {
    if (id < 0 || id > 8) {
        throw std::out_of_range("observable id must be in 0..8");
    }
    return observables()[static_cast<std::size_t>(id)];
}

Context::Context(std::array<int, 3> ids) : ids_(ids) {
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a + 1; b < 3; ++b) {
            if (!commute(observable(ids_[a]).op.exact(), observable(ids_[b]).op.exact())) {
                throw std::invalid_argument("incompatible sequence");
            }
        }
    }
}

std::string Context::label() const {
    std::string s;
    for (int id : ids_) {
        s += static_cast<char>('0' + id);
    }
    return s;
}

const std::vector<Context> &ks_contexts() {
    static const std::vector<Context> c = {
        Context({0, 1, 2}), Context({0, 3, 6}), Context({3, 4, 5}),
        Context({1, 4, 7}), Context({6, 7, 8}), Context({2, 5, 8}),
    };
    return c;
}

std::string Proposition::outcome_label() const {
    std::string s;
    for (int b : outcomes) {
        s += static_cast<char>('0' + b);
    }
    return s;
}

std::string Proposition::name() const { return "P(" + outcome_label() + "|" + context.label() + ")"; }

const std::vector<Proposition> &xi_terms() {
    static const std::vector<Proposition> terms = [] {
        const std::array<std::array<std::array<int, 3>, 3>, 6> outcomes = {{
            {{{0, 0, 1}, {1, 1, 1}, {1, 0, 0}}},  // 012
            {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}},  // 036
            {{{1, 0, 0}, {1, 1, 1}, {0, 1, 0}}},  // 345
            {{{1, 0, 0}, {0, 0, 1}, {1, 1, 1}}},  // 147
            {{{1, 0, 0}, {0, 0, 1}, {1, 1, 1}}},  // 678
            {{{1, 1, 0}, {0, 0, 0}, {0, 1, 1}}},  // 258
        }};
        std::vector<Proposition> out;
        for (std::size_t k = 0; k < 6; ++k) {
            for (const auto &o : outcomes[k]) {
                out.push_back(Proposition{o, ks_contexts()[k]});
            }
        }
        return out;
    }();
    return terms;
}

double sigma(const DensityMatrix &rho) {
    double s = 0.0;
    for (const auto &p : ks_projectors()) {
        s += expectation(rho, p);
    }
    return s;
}

Projector outcome_projector(const Observable &obs, int bit) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("outcome bit must be 0 or 1");
    }
    auto [plus, minus] = eigenprojectors_pm(obs.op);
    return bit == 1 ? plus : minus;
}

Projector proposition_projector(const Proposition &prop) {
    QMatrix p = QMatrix::identity(4);
    for (std::size_t k = 0; k < 3; ++k) {
        p = p * outcome_projector(observable(prop.context.ids()[k]), prop.outcomes[k]).exact();
    }
    return Projector(std::move(p));
}

double sequential_probability(const DensityMatrix &rho, const Proposition &prop, double tol) {
    ComplexMatrix state = rho.matrix();
    ComplexMatrix product = ComplexMatrix::Identity(4, 4);
    for (std::size_t k = 0; k < 3; ++k) {
        const ComplexMatrix &p = numeric_projector(prop.context.ids()[k], prop.outcomes[k]);
        state = luders(state, p);
        product = product * p;
    }
    const double sequential = real_trace(state);
    const double joint = real_trace(rho.matrix() * product);
    if (std::abs(sequential - joint) > tol) {
        throw std::logic_error("Lüders and joint-projector probabilities disagree for " + prop.name());
    }
    return std::clamp(sequential, 0.0, 1.0);
}

double luders_probability(const DensityMatrix &rho, const std::vector<std::pair<int, int>> &steps) {
    ComplexMatrix state = rho.matrix();
    for (auto [id, b] : steps) {
        state = luders(state, numeric_projector(id, b));
    }
    return real_trace(state);
}

std::vector<PropositionVertex> proposition_vertex_map() {
    const auto vectors = ks18_vectors();
    std::vector<PropositionVertex> out;
    std::vector<int> used;
    for (const auto &prop : xi_terms()) {
        const Projector p = proposition_projector(prop);
        int match = 0;
        int matches = 0;
        for (std::size_t v = 0; v < vectors.size(); ++v) {
            if (p == ks_projectors()[v]) {
                match = vectors[v].id;
                ++matches;
            }
        }
        if (matches != 1 || std::find(used.begin(), used.end(), match) != used.end()) {
            throw std::runtime_error("correspondence broken at " + prop.name());
        }
        used.push_back(match);
        out.push_back(PropositionVertex{prop, match});
    }
    return out;
}

std::vector<PropositionVertex> omitted_outcome_map() {
    std::vector<PropositionVertex> out;
    const auto extras = extra_vectors();
    for (const auto &ctx : ks_contexts()) {
        for (int code = 7; code >= 0; --code) {
            Proposition prop{{(code >> 2) & 1, (code >> 1) & 1, code & 1}, ctx};
            const bool listed = std::any_of(xi_terms().begin(), xi_terms().end(), [&](const Proposition &t) {
                return t.context == ctx && t.outcomes == prop.outcomes;
            });
            if (listed) {
                continue;
            }
            const Projector p = proposition_projector(prop);
            if (p.is_zero()) {
                continue;
            }
            int match = 0;
            for (const auto &v : extras) {
                if (p == v.projector()) {
                    match = v.id;
                }
            }
            out.push_back(PropositionVertex{prop, match});
        }
    }
    return out;
}

std::vector<Proposition> parity_violating_propositions() {
    std::vector<Proposition> out;
    for (const auto &ctx : ks_contexts()) {
        for (int code = 7; code >= 0; --code) {
            Proposition prop{{(code >> 2) & 1, (code >> 1) & 1, code & 1}, ctx};
            if (proposition_projector(prop).is_zero()) {
                out.push_back(prop);
            }
        }
    }
    return out;
}

double xi(const DensityMatrix &rho) {
    double s = 0.0;
    for (const auto &prop : xi_terms()) {
        s += sequential_probability(rho, prop);
    }
    return s;
}

std::vector<std::pair<std::string, double>> ideal_probability_table(const DensityMatrix &rho) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto &prop : xi_terms()) {
        out.emplace_back(prop.name(), sequential_probability(rho, prop));
    }
    return out;
}

std::vector<std::pair<std::string, double>> ideal_probability_table(const std::string &state_code) {
    return ideal_probability_table(catalog_entry(state_code).state);
}

AuditReport compatibility_audit(const Context &ctx, std::uint64_t seed, int states, double tol) {
    AuditReport report;
    report.seed = seed;
    report.states = states;
    std::mt19937_64 rng(seed);
    const auto &ids = ctx.ids();
    std::array<std::array<int, 3>, 6> orders = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

    for (int s = 0; s < states; ++s) {
        const DensityMatrix rho = DensityMatrix::from_pure(random_pure_state(rng));
        for (int code = 0; code < 8; ++code) {
            const std::array<int, 3> bits = {(code >> 2) & 1, (code >> 1) & 1, code & 1};
            // Joint probability in the canonical order.
            std::vector<std::pair<int, int>> base;
            for (std::size_t k = 0; k < 3; ++k) {
                base.emplace_back(ids[k], bits[k]);
            }
            const double reference = luders_probability(rho, base);

            for (const auto &ord : orders) {
                std::vector<std::pair<int, int>> seq;
                for (int k : ord) {
                    seq.push_back(base[static_cast<std::size_t>(k)]);
                }
                const double p = luders_probability(rho, seq);
                report.max_order_deviation = std::max(report.max_order_deviation, std::abs(p - reference));
            }

            // Re-measuring any earlier observable reproduces its result.
            for (std::size_t k = 0; k < 3; ++k) {
                auto same = base;
                same.push_back(base[k]);
                auto flipped = base;
                flipped.emplace_back(base[k].first, 1 - base[k].second);
                report.max_repeat_deviation =
                    std::max({report.max_repeat_deviation, std::abs(luders_probability(rho, same) - reference),
                              std::abs(luders_probability(rho, flipped))});
            }
        }

        // Single-observable marginals do not depend on position in the sequence.
        for (std::size_t k = 0; k < 3; ++k) {
            for (int b = 0; b < 2; ++b) {
                const double direct = luders_probability(rho, {{ids[k], b}});
                for (const auto &ord : orders) {
                    double marginal = 0.0;
                    for (int code = 0; code < 8; ++code) {
                        const std::array<int, 3> bits = {(code >> 2) & 1, (code >> 1) & 1, code & 1};
                        if (bits[k] != b) {
                            continue;
                        }
                        std::vector<std::pair<int, int>> seq;
                        for (int j : ord) {
                            seq.emplace_back(ids[static_cast<std::size_t>(j)], bits[static_cast<std::size_t>(j)]);
                        }
                        marginal += luders_probability(rho, seq);
                    }
                    report.max_marginal_deviation = std::max(report.max_marginal_deviation, std::abs(marginal - direct));
                }
            }
        }
    }
    if (report.max_order_deviation > tol) {
        report.violations.push_back("order invariance");
    }
    if (report.max_repeat_deviation > tol) {
        report.violations.push_back("repeat idempotence");
    }
    if (report.max_marginal_deviation > tol) {
        report.violations.push_back("marginal consistency");
    }
    report.ok = report.violations.empty();
    return report;
}

DensityMatrix apply_noise(const DensityMatrix &rho, const NoiseChannel &ch) {
    if (ch.kind == NoiseChannel::Kind::kNone) {
        return rho;
    }
    if (!(ch.visibility >= 0.0 && ch.visibility <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0,1]");
    }
    const auto n = static_cast<Eigen::Index>(rho.dim());
    const ComplexMatrix mixed = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
    return DensityMatrix(ch.visibility * rho.matrix() + (1.0 - ch.visibility) * mixed);
}

PureState random_pure_state(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector a(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        a(i) = {re, im};
    }
    return PureState(std::move(a));
}

DensityMatrix random_mixed_state(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix g(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(r, c) = {re, im};
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

}  // namespace ks18
