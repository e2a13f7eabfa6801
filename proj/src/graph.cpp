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

#include "ks18/graph.hpp"

#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ks18 {

ExclusivityGraph::ExclusivityGraph(std::size_t n) : labels_(n), adj_(n, 0) {
    if (n > kMaxVertices) {
        throw std::invalid_argument("graph has more than 64 vertices");
    }
    std::iota(labels_.begin(), labels_.end(), 1);
}

ExclusivityGraph::ExclusivityGraph(std::vector<int> labels) : labels_(std::move(labels)), adj_(labels_.size(), 0) {
    if (labels_.size() > kMaxVertices) {
        throw std::invalid_argument("graph has more than 64 vertices");
    }
}

ExclusivityGraph ExclusivityGraph::from_edges(std::size_t n,
                                              const std::vector<std::pair<std::size_t, std::size_t>> &edges) {
    ExclusivityGraph g(n);
    for (auto [a, b] : edges) {
        g.add_edge(a, b);
    }
    return g;
}

ExclusivityGraph ExclusivityGraph::complete(std::size_t n) {
    ExclusivityGraph g(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            g.add_edge(a, b);
        }
    }
    return g;
}

ExclusivityGraph ExclusivityGraph::cycle(std::size_t n) {
    ExclusivityGraph g(n);
    for (std::size_t a = 0; a < n; ++a) {
        g.add_edge(a, (a + 1) % n);
    }
    return g;
}

ExclusivityGraph ExclusivityGraph::path(std::size_t n) {
    ExclusivityGraph g(n);
    for (std::size_t a = 0; a + 1 < n; ++a) {
        g.add_edge(a, a + 1);
    }
    return g;
}

ExclusivityGraph ExclusivityGraph::parse_edge_list(const std::string &text) {
    std::istringstream in(text);
    long long n = -1;
    if (!(in >> n) || n < 0) {
        throw std::invalid_argument("edge list: missing vertex count");
    }
    if (static_cast<unsigned long long>(n) > kMaxVertices) {
        throw std::invalid_argument("edge list: more than 64 vertices");
    }
    ExclusivityGraph g(static_cast<std::size_t>(n));
    long long a = 0;
    long long b = 0;
    while (in >> a) {
        if (!(in >> b)) {
            throw std::invalid_argument("edge list: dangling vertex");
        }
        if (a < 1 || b < 1 || a > n || b > n) {
            throw std::invalid_argument("edge list: vertex out of range");
        }
        g.add_edge(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
    }
    if (!in.eof()) {
        throw std::invalid_argument("edge list: unparseable token");
    }
    return g;
}

void ExclusivityGraph::add_edge(std::size_t a, std::size_t b) {
    if (a >= size() || b >= size()) {
        throw std::out_of_range("edge endpoint out of range");
    }
    if (a == b) {
        throw std::invalid_argument("self-loop");
    }
    adj_[a] |= bit(b);
    adj_[b] |= bit(a);
}

std::size_t ExclusivityGraph::degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(adj_[v])); }

VertexMask ExclusivityGraph::all_vertices() const {
    return size() == kMaxVertices ? ~VertexMask{0} : (bit(size()) - 1);
}

std::size_t ExclusivityGraph::index_of(int label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return i;
        }
    }
    throw std::out_of_range("unknown vertex label " + std::to_string(label));
}

std::vector<std::pair<std::size_t, std::size_t>> ExclusivityGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = a + 1; b < size(); ++b) {
            if (adjacent(a, b)) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

std::size_t ExclusivityGraph::edge_count() const {
    std::size_t twice = 0;
    for (auto m : adj_) {
        twice += static_cast<std::size_t>(std::popcount(m));
    }
    return twice / 2;
}

ExclusivityGraph ExclusivityGraph::complement() const {
    ExclusivityGraph g(labels_);
    const VertexMask all = all_vertices();
    for (std::size_t v = 0; v < size(); ++v) {
        g.adj_[v] = all & ~adj_[v] & ~bit(v);
    }
    return g;
}

ExclusivityGraph ExclusivityGraph::permuted(const std::vector<std::size_t> &perm) const {
    if (perm.size() != size()) {
        throw std::invalid_argument("permutation size mismatch");
    }
    std::vector<int> labels(size());
    for (std::size_t i = 0; i < size(); ++i) {
        labels.at(perm[i]) = labels_[i];
    }
    ExclusivityGraph g(std::move(labels));
    for (auto [a, b] : edges()) {
        g.add_edge(perm[a], perm[b]);
    }
    return g;
}

bool ExclusivityGraph::is_clique(VertexMask s) const {
    for (VertexMask rest = s; rest != 0; rest &= rest - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(rest));
        if ((s & ~bit(v) & ~adj_[v]) != 0) {
            return false;
        }
    }
    return true;
}

bool ExclusivityGraph::is_independent(VertexMask s) const {
    for (VertexMask rest = s; rest != 0; rest &= rest - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(rest));
        if ((s & adj_[v]) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> mask_members(VertexMask m) {
    std::vector<std::size_t> out;
    for (; m != 0; m &= m - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
}

VertexMask mask_of(const std::vector<std::size_t> &members) {
    VertexMask m = 0;
    for (auto v : members) {
        m |= bit(v);
    }
    return m;
}

}  // namespace ks18
