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

#include "ks18/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace ks18 {

ComplexMatrix to_eigen(const QMatrix &m) {
    const auto n = static_cast<Eigen::Index>(m.dim());
    ComplexMatrix out(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            out(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).to_complex();
        }
    }
    return out;
}

HermitianOperator::HermitianOperator(QMatrix m) : m_(std::move(m)) {
    if (!m_.is_hermitian()) {
        throw std::invalid_argument("operator is not Hermitian");
    }
    d_ = to_eigen(m_);
}

Projector::Projector(QMatrix m) : m_(std::move(m)) {
    if (!m_.is_hermitian()) {
        throw std::invalid_argument("projector is not Hermitian");
    }
    if (!(m_ * m_ == m_)) {
        throw std::invalid_argument("projector is not idempotent");
    }
    // For an orthogonal projector trace == rank.
    QComplex t = m_.trace();
    if (sgn(t.im) != 0 || t.re.get_den() != 1) {
        throw std::invalid_argument("projector trace is not an integer");
    }
    rank_ = static_cast<std::size_t>(t.re.get_num().get_ui());
    d_ = to_eigen(m_);
}

PureState::PureState(ComplexVector amplitudes) : a_(std::move(amplitudes)) {
    const double norm = a_.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("degenerate vector");
    }
    a_ /= norm;
}

DensityDiagnostics is_density_matrix(const ComplexMatrix &m, double tol) {
    DensityDiagnostics d;
    if (m.rows() != m.cols() || m.rows() == 0) {
        d.ok = false;
        d.violation = "not square";
        return d;
    }
    if (!m.allFinite()) {
        d.ok = false;
        d.violation = "non-finite entry";
        return d;
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) {
        d.ok = false;
        d.violation = "not Hermitian";
        return d;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = es.eigenvalues().minCoeff();
    if (d.min_eigenvalue < -tol) {
        d.ok = false;
        d.violation = "negative eigenvalue";
        return d;
    }
    if (std::abs(m.trace() - std::complex<double>(1.0, 0.0)) > tol) {
        d.ok = false;
        d.violation = "trace is not 1";
        return d;
    }
    return d;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    auto d = is_density_matrix(m_, tol);
    if (!d.ok) {
        throw std::invalid_argument("invalid density matrix: " + d.violation);
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) { return DensityMatrix(psi.projector()); }

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

Projector projector_from_vector(const std::vector<long> &v) {
    std::vector<QComplex> q;
    q.reserve(v.size());
    for (long x : v) {
        q.emplace_back(x);
    }
    return projector_from_vector(q);
}

Projector projector_from_vector(const std::vector<QComplex> &v) {
    Rational norm2 = 0;
    for (const auto &x : v) {
        norm2 += x.norm2();
    }
    if (sgn(norm2) == 0) {
        throw std::invalid_argument("degenerate vector");
    }
    return Projector(QComplex(Rational(1) / norm2) * QMatrix::outer(v, v));
}

std::pair<Projector, Projector> eigenprojectors_pm(const HermitianOperator &o) {
    const QMatrix id = QMatrix::identity(o.dim());
    if (!(o.exact() * o.exact() == id)) {
        throw std::invalid_argument("observable is not ±1-valued");
    }
    const QComplex half(Rational(1, 2));
    return {Projector(half * (id + o.exact())), Projector(half * (id - o.exact()))};
}

double expectation(const DensityMatrix &rho, const Projector &p, double tol) {
    if (rho.dim() != p.dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    // trace(rho P) = sum_ij rho_ij P_ji
    double value = (rho.matrix().cwiseProduct(p.matrix().transpose())).sum().real();
    if (value < 0.0 && value > -tol) {
        value = 0.0;
    } else if (value > 1.0 && value < 1.0 + tol) {
        value = 1.0;
    }
    return value;
}

QComplex trace_product(const Projector &p, const Projector &q) { return (p.exact() * q.exact()).trace(); }

}  // namespace ks18
