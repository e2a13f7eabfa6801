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

#include <Eigen/Dense>

#include "ks18/graph.hpp"

namespace ks18 {

struct SdpResult {
    double primal = 0.0;  // trace(J X) at the final iterate
    double dual = 0.0;    // dual objective bound
    double value = 0.0;   // midpoint of primal and dual
    double gap = 0.0;     // |dual - primal|
    double primal_infeasibility = 0.0;
    double dual_infeasibility = 0.0;
    int iterations = 0;
    bool converged = false;
    Eigen::MatrixXd x;
};

/// Lovász number by a primal-dual interior point method (HKM direction with
/// Mehrotra correction) on
///   maximize trace(J X)  s.t.  trace X = 1,  X_ij = 0 for every edge,  X ⪰ 0.
/// Adjacent vertices are the orthogonal ones, so K_n gives 1 and the empty
/// graph gives n.
SdpResult lovasz_theta_sdp(const ExclusivityGraph &g, double tol = 1e-9, int max_iterations = 200);

}  // namespace ks18
