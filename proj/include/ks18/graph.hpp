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

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ks18 {

/// Bit set over at most 64 vertices, indexed 0..n-1.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

/// Simple undirected graph on at most 64 vertices. Vertices are addressed by
/// 0-based index internally and carry an integer label (1-based ids for the
/// KS set).
class ExclusivityGraph {
   public:
    ExclusivityGraph() = default;
    /// Labels default to 1..n.
    explicit ExclusivityGraph(std::size_t n);
    ExclusivityGraph(std::vector<int> labels);

    /// Edges given as 0-based index pairs.
    static ExclusivityGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges);
    static ExclusivityGraph complete(std::size_t n);
    static ExclusivityGraph cycle(std::size_t n);
    static ExclusivityGraph path(std::size_t n);

    /// Plain edge-list text: first token n, then 1-indexed "i j" pairs.
    static ExclusivityGraph parse_edge_list(const std::string &text);

    void add_edge(std::size_t a, std::size_t b);

    std::size_t size() const { return labels_.size(); }
    bool adjacent(std::size_t a, std::size_t b) const { return (adj_[a] >> b) & 1U; }
    VertexMask neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const;
    VertexMask all_vertices() const;

    int label(std::size_t v) const { return labels_[v]; }
    const std::vector<int> &labels() const { return labels_; }
    /// Index of a label; throws std::out_of_range.
    std::size_t index_of(int label) const;

    /// Edges as 0-based index pairs (a < b), lexicographic.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::size_t edge_count() const;
    ExclusivityGraph complement() const;
    /// Same graph with vertex i moved to perm[i]; labels follow the vertices.
    ExclusivityGraph permuted(const std::vector<std::size_t> &perm) const;

    bool is_clique(VertexMask s) const;
    bool is_independent(VertexMask s) const;

    friend bool operator==(const ExclusivityGraph &a, const ExclusivityGraph &b) = default;

   private:
    std::vector<int> labels_;
    std::vector<VertexMask> adj_;
};

inline VertexMask bit(std::size_t v) { return VertexMask{1} << v; }
std::vector<std::size_t> mask_members(VertexMask m);
VertexMask mask_of(const std::vector<std::size_t> &members);

}  // namespace ks18
