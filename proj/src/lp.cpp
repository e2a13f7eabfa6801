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

#include "ks18/lp.hpp"

#include <stdexcept>

#include "ks18/rational.hpp"

namespace ks18 {

template <class T>
LpSolution<T> simplex_maximize(const std::vector<std::vector<T>> &a, const std::vector<T> &b,
                               const std::vector<T> &c, const T &eps) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) {
        throw std::invalid_argument("simplex: row count mismatch");
    }
    const T zero(0);
    // Tableau columns: n structural, m slack, 1 rhs. Last row is the
    // reduced-cost row, stored as -c so optimality means all entries >= 0.
    const std::size_t width = n + m + 1;
    std::vector<std::vector<T>> t(m + 1, std::vector<T>(width, zero));
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        if (a[r].size() != n) {
            throw std::invalid_argument("simplex: column count mismatch");
        }
        if (b[r] < zero) {
            throw std::invalid_argument("simplex: negative right-hand side");
        }
        for (std::size_t j = 0; j < n; ++j) {
            t[r][j] = a[r][j];
        }
        t[r][n + r] = T(1);
        t[r][width - 1] = b[r];
        basis[r] = n + r;
    }
    for (std::size_t j = 0; j < n; ++j) {
        t[m][j] = -c[j];
    }

    LpSolution<T> sol;
    for (;;) {
        // Bland: lowest-index column with negative reduced cost.
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (t[m][j] < -eps) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            break;
        }
        std::size_t leave = m;
        T best_ratio{};
        for (std::size_t r = 0; r < m; ++r) {
            if (t[r][enter] > eps) {
                T ratio = t[r][width - 1] / t[r][enter];
                if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == m) {
            throw std::runtime_error("simplex: unbounded");
        }
        const T pivot = t[leave][enter];
        for (auto &x : t[leave]) {
            x /= pivot;
        }
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == leave || t[r][enter] == zero) {
                continue;
            }
            const T f = t[r][enter];
            for (std::size_t j = 0; j < width; ++j) {
                t[r][j] -= f * t[leave][j];
            }
        }
        basis[leave] = enter;
        ++sol.pivots;
    }

    sol.x.assign(n, zero);
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n) {
            sol.x[basis[r]] = t[r][width - 1];
        }
    }
    sol.value = t[m][width - 1];
    return sol;
}

template LpSolution<double> simplex_maximize<double>(const std::vector<std::vector<double>> &,
                                                     const std::vector<double> &, const std::vector<double> &,
                                                     const double &);
template LpSolution<Rational> simplex_maximize<Rational>(const std::vector<std::vector<Rational>> &,
                                                         const std::vector<Rational> &,
                                                         const std::vector<Rational> &, const Rational &);

}  // namespace ks18
