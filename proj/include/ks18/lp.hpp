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
#include <vector>

namespace ks18 {

template <class T>
struct LpSolution {
    T value{};
    std::vector<T> x;
    std::size_t pivots = 0;
};

/// Dense tableau simplex with Bland's rule for
///   maximize c.x  subject to  A x <= b,  x >= 0,
/// where b >= 0 so the slack basis is feasible. `eps` is the pivot/optimality
/// tolerance (use 0 for exact scalar types). Throws std::runtime_error if
/// the problem is unbounded.
template <class T>
LpSolution<T> simplex_maximize(const std::vector<std::vector<T>> &a, const std::vector<T> &b,
                               const std::vector<T> &c, const T &eps);

}  // namespace ks18
