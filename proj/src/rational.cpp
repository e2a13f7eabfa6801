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

#include "ks18/rational.hpp"

#include <stdexcept>
#include <utility>

namespace ks18 {

std::string QComplex::str() const {
    if (sgn(im) == 0) {
        return re.get_str();
    }
    if (sgn(re) == 0) {
        return im.get_str() + "i";
    }
    std::string s = re.get_str();
    s += sgn(im) > 0 ? "+" : "";
    return s + im.get_str() + "i";
}

QMatrix::QMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

QMatrix::QMatrix(std::size_t dim, std::initializer_list<QComplex> row_major) : dim_(dim), data_(row_major) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("QMatrix: expected dim*dim entries");
    }
}

QMatrix QMatrix::identity(std::size_t dim) {
    QMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = QComplex(1);
    }
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<QComplex> &d) {
    QMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m;
}

QMatrix QMatrix::outer(const std::vector<QComplex> &u, const std::vector<QComplex> &v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("QMatrix::outer: size mismatch");
    }
    QMatrix m(u.size());
    for (std::size_t r = 0; r < u.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            m(r, c) = u[r] * v[c].conj();
        }
    }
    return m;
}

QMatrix QMatrix::adjoint() const {
    QMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            m(c, r) = (*this)(r, c).conj();
        }
    }
    return m;
}

QComplex QMatrix::trace() const {
    QComplex t;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

bool QMatrix::is_zero() const {
    for (const auto &z : data_) {
        if (!z.is_zero()) {
            return false;
        }
    }
    return true;
}

bool QMatrix::is_hermitian() const { return *this == adjoint(); }

std::size_t QMatrix::rank() const {
    std::vector<QComplex> a = data_;
    auto at = [&](std::size_t r, std::size_t c) -> QComplex & { return a[r * dim_ + c]; };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim_ && rank < dim_; ++col) {
        std::size_t pivot = rank;
        while (pivot < dim_ && at(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == dim_) {
            continue;
        }
        for (std::size_t c = 0; c < dim_; ++c) {
            std::swap(at(pivot, c), at(rank, c));
        }
        // Multiply by the conjugate over |p|^2 to invert the pivot.
        QComplex p = at(rank, col);
        QComplex inv = p.conj() / p.norm2();
        for (std::size_t r = rank + 1; r < dim_; ++r) {
            if (at(r, col).is_zero()) {
                continue;
            }
            QComplex f = at(r, col) * inv;
            for (std::size_t c = col; c < dim_; ++c) {
                at(r, c) = at(r, c) - f * at(rank, c);
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::complex<double>> QMatrix::to_complex_row_major() const {
    std::vector<std::complex<double>> out;
    out.reserve(data_.size());
    for (const auto &z : data_) {
        out.push_back(z.to_complex());
    }
    return out;
}

QMatrix operator+(const QMatrix &a, const QMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("dimension mismatch");
    }
    QMatrix m(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
        m.data_[i] = a.data_[i] + b.data_[i];
    }
    return m;
}

QMatrix operator-(const QMatrix &a, const QMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("dimension mismatch");
    }
    QMatrix m(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
        m.data_[i] = a.data_[i] - b.data_[i];
    }
    return m;
}

QMatrix operator*(const QMatrix &a, const QMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("dimension mismatch");
    }
    const std::size_t n = a.dim_;
    QMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const QComplex &x = a(r, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) += x * b(k, c);
            }
        }
    }
    return m;
}

QMatrix operator*(const QComplex &s, const QMatrix &a) {
    QMatrix m(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
        m.data_[i] = s * a.data_[i];
    }
    return m;
}

bool operator==(const QMatrix &a, const QMatrix &b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

QMatrix kron(const QMatrix &a, const QMatrix &b) {
    const std::size_t n = a.dim() * b.dim();
    QMatrix m(n);
    for (std::size_t ar = 0; ar < a.dim(); ++ar) {
        for (std::size_t ac = 0; ac < a.dim(); ++ac) {
            for (std::size_t br = 0; br < b.dim(); ++br) {
                for (std::size_t bc = 0; bc < b.dim(); ++bc) {
                    m(ar * b.dim() + br, ac * b.dim() + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return m;
}

}  // namespace ks18
