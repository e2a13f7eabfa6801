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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ks18 {

using Rational = mpq_class;

/// Gaussian rational a + b·i with exact arithmetic.
struct QComplex {
    Rational re;
    Rational im;

    QComplex() : re(0), im(0) {}
    QComplex(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    QComplex(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    QComplex conj() const { return {re, -im}; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    /// |z|^2, exact.
    Rational norm2() const { return re * re + im * im; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string str() const;

    friend QComplex operator+(const QComplex &a, const QComplex &b) { return {a.re + b.re, a.im + b.im}; }
    friend QComplex operator-(const QComplex &a, const QComplex &b) { return {a.re - b.re, a.im - b.im}; }
    friend QComplex operator-(const QComplex &a) { return {-a.re, -a.im}; }
    friend QComplex operator*(const QComplex &a, const QComplex &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QComplex operator/(const QComplex &a, const Rational &d) { return {a.re / d, a.im / d}; }
    QComplex &operator+=(const QComplex &b) {
        re += b.re;
        im += b.im;
        return *this;
    }
    friend bool operator==(const QComplex &a, const QComplex &b) { return a.re == b.re && a.im == b.im; }
};

/// Dense square matrix over the Gaussian rationals.
class QMatrix {
   public:
    QMatrix() = default;
    explicit QMatrix(std::size_t dim);
    QMatrix(std::size_t dim, std::initializer_list<QComplex> row_major);

    static QMatrix identity(std::size_t dim);
    static QMatrix diagonal(const std::vector<QComplex> &d);
    /// |u><v| (no normalization).
    static QMatrix outer(const std::vector<QComplex> &u, const std::vector<QComplex> &v);

    std::size_t dim() const { return dim_; }
    const QComplex &operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    QComplex &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

    QMatrix adjoint() const;
    QComplex trace() const;
    bool is_zero() const;
    bool is_hermitian() const;
    /// Matrix rank by exact Gaussian elimination.
    std::size_t rank() const;
    std::vector<std::complex<double>> to_complex_row_major() const;

    friend QMatrix operator+(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator-(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator*(const QComplex &s, const QMatrix &a);
    friend bool operator==(const QMatrix &a, const QMatrix &b);

   private:
    std::size_t dim_ = 0;
    std::vector<QComplex> data_;
};

/// Kronecker product a ⊗ b.
QMatrix kron(const QMatrix &a, const QMatrix &b);

}  // namespace ks18
