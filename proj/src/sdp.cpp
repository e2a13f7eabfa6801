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

#include "ks18/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ks18 {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Standard form: minimize <C,X> s.t. <A_k,X> = b_k, X ⪰ 0, with
// C = -J, A_0 = I (b_0 = 1) and A_e = E_ab + E_ba (b_e = 0) per edge.
// Dual: maximize b.y s.t. sum_k y_k A_k + Z = C, Z ⪰ 0.
class ThetaProgram {
   public:
    explicit ThetaProgram(const ExclusivityGraph &g) : n_(static_cast<Eigen::Index>(g.size())), edges_(g.edges()) {}

    Eigen::Index n() const { return n_; }
    Eigen::Index m() const { return static_cast<Eigen::Index>(edges_.size()) + 1; }

    MatrixXd cost() const { return -MatrixXd::Ones(n_, n_); }

    VectorXd rhs() const {
        VectorXd b = VectorXd::Zero(m());
        b(0) = 1.0;
        return b;
    }

    VectorXd apply(const MatrixXd &x) const {
        VectorXd out(m());
        out(0) = x.trace();
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const auto [a, b] = idx(e);
            out(static_cast<Eigen::Index>(e) + 1) = x(a, b) + x(b, a);
        }
        return out;
    }

    MatrixXd adjoint(const VectorXd &y) const {
        MatrixXd out = y(0) * MatrixXd::Identity(n_, n_);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const auto [a, b] = idx(e);
            const double v = y(static_cast<Eigen::Index>(e) + 1);
            out(a, b) += v;
            out(b, a) += v;
        }
        return out;
    }

    /// M_kl = trace(A_k X A_l H).
    MatrixXd schur(const MatrixXd &x, const MatrixXd &h) const {
        const Eigen::Index mm = m();
        MatrixXd s(mm, mm);
        const MatrixXd hx = h * x;
        s(0, 0) = (x.cwiseProduct(h.transpose())).sum();
        for (std::size_t f = 0; f < edges_.size(); ++f) {
            const auto [c, d] = idx(f);
            const auto l = static_cast<Eigen::Index>(f) + 1;
            s(0, l) = s(l, 0) = hx(d, c) + hx(c, d);
        }
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const auto [a, b] = idx(e);
            const auto k = static_cast<Eigen::Index>(e) + 1;
            for (std::size_t f = e; f < edges_.size(); ++f) {
                const auto [c, d] = idx(f);
                const auto l = static_cast<Eigen::Index>(f) + 1;
                const double v = x(b, c) * h(d, a) + x(b, d) * h(c, a) + x(a, c) * h(d, b) + x(a, d) * h(c, b);
                s(k, l) = s(l, k) = v;
            }
        }
        return s;
    }

   private:
    std::pair<Eigen::Index, Eigen::Index> idx(std::size_t e) const {
        return {static_cast<Eigen::Index>(edges_[e].first), static_cast<Eigen::Index>(edges_[e].second)};
    }

    Eigen::Index n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

MatrixXd sym(const MatrixXd &a) { return 0.5 * (a + a.transpose()); }

// Largest alpha in (0, 1] keeping x + alpha dx positive definite, damped by gamma.
double step_length(const MatrixXd &x, const MatrixXd &dx, double gamma) {
    Eigen::LLT<MatrixXd> llt(x);
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error("sdp: iterate lost positive definiteness");
    }
    const MatrixXd linv = llt.matrixL().solve(MatrixXd::Identity(x.rows(), x.cols()));
    const MatrixXd s = sym(linv * dx * linv.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(s, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    if (lmin >= 0.0) {
        return 1.0;
    }
    return std::min(1.0, -gamma / lmin);
}

struct Direction {
    MatrixXd dx;
    VectorXd dy;
    MatrixXd dz;
};

}  // namespace

SdpResult lovasz_theta_sdp(const ExclusivityGraph &g, double tol, int max_iterations) {
    SdpResult res;
    const auto n = static_cast<Eigen::Index>(g.size());
    if (n == 0) {
        res.converged = true;
        return res;
    }
    ThetaProgram prog(g);
    const MatrixXd c = prog.cost();
    const VectorXd b = prog.rhs();

    // Strictly feasible start on both sides.
    MatrixXd x = MatrixXd::Identity(n, n) / static_cast<double>(n);
    VectorXd y = VectorXd::Zero(prog.m());
    y(0) = -static_cast<double>(n + 1);
    MatrixXd z = c - prog.adjoint(y);

    const double c_norm = c.norm();
    for (int it = 0; it < max_iterations; ++it) {
        const VectorXd rp = b - prog.apply(x);
        const MatrixXd rd = c - z - prog.adjoint(y);
        const double pobj = (c.cwiseProduct(x)).sum();
        const double dobj = b.dot(y);
        res.primal = -pobj;
        res.dual = -dobj;
        res.primal_infeasibility = rp.norm() / (1.0 + b.norm());
        res.dual_infeasibility = rd.norm() / (1.0 + c_norm);
        res.gap = std::abs(pobj - dobj);
        res.iterations = it;
        const double rel_gap = res.gap / (1.0 + std::abs(pobj) + std::abs(dobj));
        if (rel_gap < tol && res.primal_infeasibility < tol && res.dual_infeasibility < tol) {
            res.converged = true;
            break;
        }

        const double mu = (x.cwiseProduct(z)).sum() / static_cast<double>(n);
        const MatrixXd h = sym(z.llt().solve(MatrixXd::Identity(n, n)));
        Eigen::LDLT<MatrixXd> schur(prog.schur(x, h));
        if (schur.info() != Eigen::Success) {
            throw std::runtime_error("sdp: Schur complement factorization failed");
        }

        auto solve = [&](const MatrixXd &rc) {
            Direction d;
            const MatrixXd base = rc * h - x * rd * h;
            d.dy = schur.solve(rp - prog.apply(base));
            d.dz = sym(rd - prog.adjoint(d.dy));
            d.dx = sym(rc * h - x * d.dz * h);
            return d;
        };

        const MatrixXd xz = x * z;
        const Direction pred = solve(-xz);
        const double ap = step_length(x, pred.dx, 1.0);
        const double ad = step_length(z, pred.dz, 1.0);
        const double mu_aff = ((x + ap * pred.dx).cwiseProduct(z + ad * pred.dz)).sum() / static_cast<double>(n);
        const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

        const MatrixXd rc = sigma * mu * MatrixXd::Identity(n, n) - xz - pred.dx * pred.dz;
        const Direction d = solve(rc);
        const double gamma = 0.95;
        const double alpha_p = step_length(x, d.dx, gamma);
        const double alpha_d = step_length(z, d.dz, gamma);
        x = sym(x + alpha_p * d.dx);
        y = y + alpha_d * d.dy;
        z = sym(z + alpha_d * d.dz);
        res.iterations = it + 1;
    }
    res.value = 0.5 * (res.primal + res.dual);
    res.x = x;
    return res;
}

}  // namespace ks18
