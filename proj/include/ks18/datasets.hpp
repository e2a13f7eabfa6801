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

// Embedded measurement tables (CSV), overridable via KS_FIXTURES_DIR.
//
//   table1_sigma.csv  state_code,value,uncertainty   sigma, 15 states
//   table2_xi.csv     state_code,value,uncertainty   xi, 15 states
//   table4_sigma.csv  state_code,value,uncertainty   sigma, 28 states (no errors)
//   table5_edges.csv  i,j,value                      P_{v_j}(Pi_i = 1) on edges
//   terms.csv         state_code,context,outcomes,value,uncertainty

#include <string>
#include <utility>
#include <vector>

namespace ks18 {

/// Names of the embedded fixtures, in a fixed order.
std::vector<std::string> fixture_names();

/// Contents of a fixture. A file of the same name in $KS_FIXTURES_DIR takes
/// precedence over the embedded copy. Throws std::invalid_argument for an
/// unknown name, std::runtime_error if the override cannot be read.
std::string fixture_text(const std::string &name);

/// The embedded copy, ignoring KS_FIXTURES_DIR.
std::string embedded_fixture_text(const std::string &name);

/// Writes every fixture into `dir`; returns the written paths.
std::vector<std::string> dump_fixtures(const std::string &dir);

namespace detail {
const std::vector<std::pair<std::string, std::string>> &embedded_fixtures();
}  // namespace detail

}  // namespace ks18
