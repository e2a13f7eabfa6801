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

// Small dense operators. Anything built from integer vectors or Pauli
// products is exact (Gaussian rationals); states are floating point.

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ks18/rational.hpp"

namespace ks18 {

inline constexpr double kTolAlg = 1e-12;

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

ComplexMatrix to_eigen(const QMatrix &m);

/// Exact Hermitian operator.
class HermitianOperator {
   public:
    explicit HermitianOperator(QMatrix m);

    const QMatrix &exact() const { return m_; }
    const ComplexMatrix &matrix() const { return d_; }
    std::size_t dim() const { return m_.dim(); }

   private:
    QMatrix m_;
    ComplexMatrix d_;
};

/// Exact orthogonal projector: Hermitian and idempotent.
class Projector {
   public:
    explicit Projector(QMatrix m);

    const QMatrix &exact() const { return m_; }
    const ComplexMatrix &matrix() const { return d_; }
    std::size_t dim() const { return m_.dim(); }
    std::size_t rank() const { return rank_; }
    bool is_zero() const { return rank_ == 0; }

    friend bool operator==(const Projector &a, const Projector &b) { return a.m_ == b.m_; }

   private:
    QMatrix m_;
    ComplexMatrix d_;
    std::size_t rank_ = 0;
};

/// Unit vector; construction normalizes.
class PureState {
   public:
    explicit PureState(ComplexVector amplitudes);

    const ComplexVector &amplitudes() const { return a_; }
    std::size_t dim() const { return static_cast<std::size_t>(a_.size()); }
    ComplexMatrix projector() const { return a_ * a_.adjoint(); }

   private:
    ComplexVector a_;
};

struct DensityDiagnostics {
    bool ok = true;
    std::string violation;  // empty when ok
    double min_eigenvalue = 0.0;
};

/// Checks Hermiticity, unit trace and positive semidefiniteness.
DensityDiagnostics is_density_matrix(const ComplexMatrix &m, double tol = kTolAlg);

class DensityMatrix {
   public:
    /// Throws std::invalid_argument naming the violated property.
    explicit DensityMatrix(ComplexMatrix m, double tol = kTolAlg);
    static DensityMatrix from_pure(const PureState &psi);
    static DensityMatrix maximally_mixed(std::size_t dim);

    const ComplexMatrix &matrix() const { return m_; }
    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

   private:
    ComplexMatrix m_;
};

/// |v><v| / <v|v>. Integer input yields entries with denominator <v|v>.
Projector projector_from_vector(const std::vector<long> &v);
Projector projector_from_vector(const std::vector<QComplex> &v);

/// (I + O)/2 and (I - O)/2 for an involution O.
std::pair<Projector, Projector> eigenprojectors_pm(const HermitianOperator &o);

/// Born rule trace(rho P), clamped into [0,1] when within tol of the boundary.
double expectation(const DensityMatrix &rho, const Projector &p, double tol = kTolAlg);

/// Exact trace(P Q).
QComplex trace_product(const Projector &p, const Projector &q);

}  // namespace ks18
