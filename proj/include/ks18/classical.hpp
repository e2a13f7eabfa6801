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

// Noncontextual side: deterministic 0/1 assignments and the ball-in-boxes
// strategy that saturates the classical bound.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ks18/graph.hpp"

namespace ks18 {

struct Assignment {
    std::map<int, int> values;  // vertex label -> 0/1; missing labels count as 0
};

/// Number of vertices assigned 1. Throws std::invalid_argument naming the
/// first edge with both endpoints 1, e.g. "inadmissible assignment: edge {1,2}".
int classical_sigma(const ExclusivityGraph &g, const Assignment &a);

struct ClassicalOptimum {
    int value = 0;
    std::vector<int> witness;  // vertex labels
};

/// alpha(G) with a maximum independent set.
ClassicalOptimum max_classical_sigma(const ExclusivityGraph &g);

struct BoxStrategy {
    std::vector<int> boxes;                // box labels
    std::map<int, std::set<int>> tests;    // vertex label -> boxes answering yes

    /// box -> vertices answering yes when the ball is in that box.
    std::map<int, std::set<int>> dual() const;
    /// The assignment induced by placing the ball in box b.
    Assignment placement(int box) const;

    friend bool operator==(const BoxStrategy &, const BoxStrategy &) = default;
};

/// Finds n boxes (n = number of vertices) whose yes-sets U_b are independent
/// alpha-sets, every vertex lying in exactly alpha of them, and every
/// non-adjacent pair sharing at least one box. Lexicographic backtracking,
/// deterministic. Throws std::runtime_error("no balanced box strategy found").
BoxStrategy construct_box_strategy(const ExclusivityGraph &g);

struct StrategyReport {
    bool ok = true;
    std::vector<std::string> failures;
    bool exclusivity = true;   // adjacent tests have disjoint box sets
    bool independence = true;  // every U_b is independent
    bool balanced = true;      // all tests same size, all boxes same count
    std::map<int, std::size_t> test_sizes;
    std::map<int, std::size_t> box_counts;
    int min_sigma = 0;
    int max_sigma = 0;
    double average_sigma = 0.0;
    double yes_probability = 0.0;  // mean |tests(i)| / #boxes
};

StrategyReport validate_box_strategy(const ExclusivityGraph &g, const BoxStrategy &s);

/// {"boxes": [...], "dual": {...}, "tests": {...}}
std::string strategy_to_json(const BoxStrategy &s);
/// Throws std::invalid_argument on malformed input.
BoxStrategy strategy_from_json(const std::string &text);

}  // namespace ks18
