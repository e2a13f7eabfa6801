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

// Serialization shared by the command-line tools: deterministic JSON
// (sorted keys, 12 significant digits), the ks-set.json graph format and
// the SVG band chart.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ks18/certify.hpp"
#include "ks18/graph.hpp"
#include "ks18/ksets.hpp"

namespace ks18 {

using Json = nlohmann::json;

/// A JSON number rounded to 12 significant digits.
Json json_number(double x);
/// Pretty-printed with a trailing newline.
std::string dump_json(const Json &j);

struct GraphInput {
    ExclusivityGraph graph;
    std::vector<Basis> bases;
    std::optional<std::vector<KsVector>> vectors;
};

/// The KS-18 set.
GraphInput ks18_input();

/// Vectors, derived edges and bases, degree and membership counts, and
/// flags where the derived structure disagrees with documented counts.
Json ks_set_json(const GraphInput &in);

/// Reads ks-set.json style input. With "vectors" present the graph and bases
/// are derived from them; otherwise "vertices", "edges" and "bases" are used.
/// Throws std::invalid_argument on malformed input.
GraphInput graph_from_json(const std::string &text);

/// JSON (by content) or an edge list ("n" then "a b" lines, 1-based).
GraphInput load_graph_file(const std::string &path);

/// States on x, value on y: classical bound 4 (solid), corrected bound
/// (dashed), shaded expected band, measured points with error bars.
std::string band_chart_svg(const CertificationReport &report, const std::string &title);

}  // namespace ks18
