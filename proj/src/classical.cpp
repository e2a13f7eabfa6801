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

#include "ks18/classical.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "ks18/invariants.hpp"

namespace ks18 {

namespace {

std::string edge_name(int a, int b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

void independent_sets_of_size(const ExclusivityGraph &g, std::size_t k, std::size_t start, VertexMask current,
                              std::size_t size, std::vector<VertexMask> &out) {
    if (size == k) {
        out.push_back(current);
        return;
    }
    for (std::size_t v = start; v < g.size(); ++v) {
        if ((g.neighbors(v) & current) == 0) {
            independent_sets_of_size(g, k, v + 1, current | bit(v), size + 1, out);
        }
    }
}

// Exact cover-style search for the balanced strategy. Every chosen set is a
// box; `per_vertex` boxes must contain each vertex, and each non-adjacent
// pair must share a box once both of its vertices are saturated.
class BoxSearch {
   public:
    BoxSearch(const ExclusivityGraph &g, std::vector<VertexMask> sets, std::size_t per_vertex)
        : g_(g),
          n_(g.size()),
          sets_(std::move(sets)),
          per_vertex_(per_vertex),
          count_(n_, 0),
          used_(sets_.size(), false),
          cover_(n_ * n_, 0) {}

    bool run() { return recurse(); }

    std::vector<VertexMask> chosen() const {
        std::vector<VertexMask> out;
        for (std::size_t i : chosen_) {
            out.push_back(sets_[i]);
        }
        return out;
    }

   private:
    static constexpr std::uint64_t kNodeLimit = 5'000'000;

    bool recurse() {
        if (++nodes_ > kNodeLimit) {
            return false;
        }
        std::size_t v = n_;
        for (std::size_t i = 0; i < n_; ++i) {
            if (count_[i] < per_vertex_) {
                v = i;
                break;
            }
        }
        if (v == n_) {
            return true;
        }
        std::vector<std::size_t> candidates;
        for (std::size_t s = 0; s < sets_.size(); ++s) {
            if (used_[s] || !((sets_[s] >> v) & 1U)) {
                continue;
            }
            bool room = true;
            for (std::size_t u : mask_members(sets_[s])) {
                room = room && count_[u] < per_vertex_;
            }
            if (room) {
                candidates.push_back(s);
            }
        }
        std::vector<std::size_t> combo;
        return choose(candidates, 0, per_vertex_ - count_[v], combo);
    }

    bool choose(const std::vector<std::size_t> &cands, std::size_t from, std::size_t need,
                std::vector<std::size_t> &combo) {
        if (need == 0) {
            return try_combo(combo);
        }
        for (std::size_t i = from; i + need <= cands.size(); ++i) {
            combo.push_back(cands[i]);
            if (choose(cands, i + 1, need - 1, combo)) {
                return true;
            }
            combo.pop_back();
        }
        return false;
    }

    bool try_combo(const std::vector<std::size_t> &combo) {
        std::vector<std::size_t> next = count_;
        for (std::size_t s : combo) {
            for (std::size_t u : mask_members(sets_[s])) {
                if (++next[u] > per_vertex_) {
                    return false;
                }
            }
        }
        apply(combo, +1);
        std::swap(count_, next);
        if (saturated_vertices_covered() && recurse()) {
            return true;
        }
        std::swap(count_, next);
        apply(combo, -1);
        return false;
    }

    void apply(const std::vector<std::size_t> &combo, int delta) {
        for (std::size_t s : combo) {
            used_[s] = delta > 0;
            const auto members = mask_members(sets_[s]);
            for (std::size_t a : members) {
                for (std::size_t b : members) {
                    if (a != b) {
                        cover_[a * n_ + b] += delta;
                    }
                }
            }
            if (delta > 0) {
                chosen_.push_back(s);
            } else {
                chosen_.pop_back();
            }
        }
    }

    bool saturated_vertices_covered() const {
        for (std::size_t u = 0; u < n_; ++u) {
            if (count_[u] != per_vertex_) {
                continue;
            }
            for (std::size_t w = 0; w < n_; ++w) {
                if (w != u && !g_.adjacent(u, w) && cover_[u * n_ + w] == 0) {
                    return false;
                }
            }
        }
        return true;
    }

    const ExclusivityGraph &g_;
    std::size_t n_;
    std::vector<VertexMask> sets_;
    std::size_t per_vertex_;
    std::vector<std::size_t> count_;
    std::vector<bool> used_;
    std::vector<int> cover_;
    std::vector<std::size_t> chosen_;
    std::uint64_t nodes_ = 0;
};

std::vector<int> int_array(const nlohmann::json &j, const char *what) {
    if (!j.is_array()) {
        throw std::invalid_argument(std::string("strategy JSON: '") + what + "' must be an array");
    }
    std::vector<int> out;
    for (const auto &x : j) {
        if (!x.is_number_integer()) {
            throw std::invalid_argument(std::string("strategy JSON: '") + what + "' must hold integers");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

int classical_sigma(const ExclusivityGraph &g, const Assignment &a) {
    int total = 0;
    for (const auto &[label, value] : a.values) {
        if (value != 0 && value != 1) {
            throw std::invalid_argument("assignment value for vertex " + std::to_string(label) + " is not 0/1");
        }
        (void)g.index_of(label);
        total += value;
    }
    for (const auto &[u, v] : g.edges()) {
        const int lu = g.label(u);
        const int lv = g.label(v);
        const auto iu = a.values.find(lu);
        const auto iv = a.values.find(lv);
        if (iu != a.values.end() && iv != a.values.end() && iu->second == 1 && iv->second == 1) {
            throw std::invalid_argument("inadmissible assignment: edge " + edge_name(lu, lv));
        }
    }
    return total;
}

ClassicalOptimum max_classical_sigma(const ExclusivityGraph &g) {
    const auto r = independence_number(g);
    ClassicalOptimum out;
    out.value = static_cast<int>(r.alpha);
    for (std::size_t v : r.witness) {
        out.witness.push_back(g.label(v));
    }
    return out;
}

std::map<int, std::set<int>> BoxStrategy::dual() const {
    std::map<int, std::set<int>> out;
    for (int b : boxes) {
        out[b];
    }
    for (const auto &[test, yes] : tests) {
        for (int b : yes) {
            out[b].insert(test);
        }
    }
    return out;
}

Assignment BoxStrategy::placement(int box) const {
    Assignment a;
    for (const auto &[test, yes] : tests) {
        a.values[test] = yes.count(box) ? 1 : 0;
    }
    return a;
}

BoxStrategy construct_box_strategy(const ExclusivityGraph &g) {
    const std::size_t n = g.size();
    const std::size_t alpha = independence_number(g).alpha;
    if (n == 0 || alpha == 0) {
        throw std::runtime_error("no balanced box strategy found");
    }
    // n boxes of alpha vertices each: every vertex lies in alpha boxes.
    std::vector<VertexMask> sets;
    independent_sets_of_size(g, alpha, 0, 0, 0, sets);
    BoxSearch search(g, std::move(sets), alpha);
    if (!search.run()) {
        throw std::runtime_error("no balanced box strategy found");
    }
    auto chosen = search.chosen();
    std::sort(chosen.begin(), chosen.end(), [](VertexMask a, VertexMask b) {
        return mask_members(a) < mask_members(b);
    });

    BoxStrategy s;
    for (std::size_t v = 0; v < n; ++v) {
        s.tests[g.label(v)];
    }
    for (std::size_t b = 0; b < chosen.size(); ++b) {
        const int box = static_cast<int>(b) + 1;
        s.boxes.push_back(box);
        for (std::size_t v : mask_members(chosen[b])) {
            s.tests[g.label(v)].insert(box);
        }
    }
    return s;
}

StrategyReport validate_box_strategy(const ExclusivityGraph &g, const BoxStrategy &s) {
    StrategyReport r;
    const std::set<int> box_set(s.boxes.begin(), s.boxes.end());
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (!s.tests.count(g.label(v))) {
            r.failures.push_back("missing test " + std::to_string(g.label(v)));
        }
    }
    for (const auto &[test, yes] : s.tests) {
        bool known = true;
        try {
            (void)g.index_of(test);
        } catch (const std::exception &) {
            known = false;
        }
        if (!known) {
            r.failures.push_back("unknown test " + std::to_string(test));
        }
        for (int b : yes) {
            if (!box_set.count(b)) {
                r.failures.push_back("test " + std::to_string(test) + " uses unknown box " + std::to_string(b));
            }
        }
        r.test_sizes[test] = yes.size();
    }

    // (a) exclusivity
    for (const auto &[u, v] : g.edges()) {
        const auto iu = s.tests.find(g.label(u));
        const auto iv = s.tests.find(g.label(v));
        if (iu == s.tests.end() || iv == s.tests.end()) {
            continue;
        }
        for (int b : iu->second) {
            if (iv->second.count(b)) {
                r.exclusivity = false;
                r.failures.push_back("exclusivity: tests " + std::to_string(g.label(u)) + " and " +
                                     std::to_string(g.label(v)) + " share box " + std::to_string(b));
                break;
            }
        }
    }

    // (b) independence of each U_b, and (d) sigma per placement
    const auto dual = s.dual();
    r.min_sigma = std::numeric_limits<int>::max();
    r.max_sigma = 0;
    double total = 0.0;
    for (const auto &[b, members] : dual) {
        r.box_counts[b] = members.size();
        std::vector<int> list(members.begin(), members.end());
        bool independent = true;
        for (std::size_t i = 0; i < list.size() && independent; ++i) {
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                try {
                    if (g.adjacent(g.index_of(list[i]), g.index_of(list[j]))) {
                        independent = false;
                        r.failures.push_back("independence: box " + std::to_string(b) + " holds adjacent tests " +
                                             edge_name(list[i], list[j]));
                        break;
                    }
                } catch (const std::exception &) {
                    // Unknown labels are already reported above.
                }
            }
        }
        r.independence = r.independence && independent;
        const int sigma = static_cast<int>(members.size());
        r.min_sigma = std::min(r.min_sigma, sigma);
        r.max_sigma = std::max(r.max_sigma, sigma);
        total += sigma;
    }
    if (dual.empty()) {
        r.min_sigma = 0;
    } else {
        r.average_sigma = total / static_cast<double>(dual.size());
    }

    // (c) balance
    std::set<std::size_t> sizes;
    for (const auto &[test, k] : r.test_sizes) {
        sizes.insert(k);
    }
    std::set<std::size_t> counts;
    for (const auto &[b, k] : r.box_counts) {
        counts.insert(k);
    }
    if (sizes.size() > 1) {
        r.balanced = false;
        std::map<std::size_t, std::size_t> frequency;
        for (const auto &[test, k] : r.test_sizes) {
            ++frequency[k];
        }
        const std::size_t common =
            std::max_element(frequency.begin(), frequency.end(), [](const auto &a, const auto &b) {
                return a.second < b.second;
            })->first;
        for (const auto &[test, k] : r.test_sizes) {
            if (k != common) {
                r.failures.push_back("balance: |tests(" + std::to_string(test) + ")| = " + std::to_string(k) +
                                     ", expected " + std::to_string(common));
            }
        }
    }
    if (counts.size() > 1) {
        r.balanced = false;
        r.failures.push_back("balance: worst-case sigma " + std::to_string(r.min_sigma) + " differs from best-case " +
                             std::to_string(r.max_sigma));
    }
    if (!s.boxes.empty() && !r.test_sizes.empty()) {
        double yes = 0.0;
        for (const auto &[test, k] : r.test_sizes) {
            yes += static_cast<double>(k);
        }
        r.yes_probability = yes / static_cast<double>(r.test_sizes.size()) / static_cast<double>(s.boxes.size());
    }
    r.ok = r.failures.empty();
    return r;
}

std::string strategy_to_json(const BoxStrategy &s) {
    nlohmann::ordered_json j;
    j["boxes"] = s.boxes;
    nlohmann::ordered_json dual = nlohmann::ordered_json::array();
    for (const auto &[b, members] : s.dual()) {
        dual.push_back({{"box", b}, {"tests", std::vector<int>(members.begin(), members.end())}});
    }
    j["dual"] = dual;
    nlohmann::ordered_json tests = nlohmann::ordered_json::array();
    for (const auto &[t, yes] : s.tests) {
        tests.push_back({{"boxes", std::vector<int>(yes.begin(), yes.end())}, {"id", t}});
    }
    j["tests"] = tests;
    return j.dump(2) + "\n";
}

BoxStrategy strategy_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("strategy JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("boxes") || !j.contains("tests")) {
        throw std::invalid_argument("strategy JSON: expected object with 'boxes' and 'tests'");
    }
    BoxStrategy s;
    s.boxes = int_array(j["boxes"], "boxes");
    if (!j["tests"].is_array()) {
        throw std::invalid_argument("strategy JSON: 'tests' must be an array");
    }
    for (const auto &t : j["tests"]) {
        if (!t.is_object() || !t.contains("id") || !t["id"].is_number_integer() || !t.contains("boxes")) {
            throw std::invalid_argument("strategy JSON: each test needs integer 'id' and 'boxes'");
        }
        const auto yes = int_array(t["boxes"], "boxes");
        const int id = t["id"].get<int>();
        if (s.tests.count(id)) {
            throw std::invalid_argument("strategy JSON: duplicate test " + std::to_string(id));
        }
        s.tests[id] = std::set<int>(yes.begin(), yes.end());
    }
    return s;
}

}  // namespace ks18
