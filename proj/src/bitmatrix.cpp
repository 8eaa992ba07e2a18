/*
   Copyright 2026 The lcarev Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lcarev/bitmatrix.hpp"

#include "lcarev/error.hpp"

namespace lcarev {

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i);
    return t;
}

BitVec BitMatrix::apply(const BitVec& v) const {
    if (v.size() != cols_) fail(ErrorCode::ShapeError, "vector length does not match column count");
    BitVec out(rows());
    for (std::size_t i = 0; i < rows(); ++i) out.set(i, rows_[i].dot(v));
    return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows()) fail(ErrorCode::ShapeError, "inner dimensions differ");
    BitMatrix c(a.rows(), b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.get(i, k)) c.rows_[i] ^= b.rows_[k];
    return c;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows());
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
}

std::size_t rank_gf2(BitMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && !m.get(piv, col)) ++piv;
        if (piv == m.rows()) continue;
        std::swap(m.row(piv), m.row(rank));
        for (std::size_t r = rank + 1; r < m.rows(); ++r)
            if (m.get(r, col)) m.row(r) ^= m.row(rank);
        ++rank;
    }
    return rank;
}

bool det_gf2(const BitMatrix& input, const Deadline& deadline) {
    if (!input.is_square()) fail(ErrorCode::ShapeError, "determinant of a non-square matrix");
    BitMatrix m = input;
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        deadline.tick();
        std::size_t piv = col;
        while (piv < n && !m.get(piv, col)) ++piv;
        if (piv == n) return false;
        std::swap(m.row(piv), m.row(col));
        for (std::size_t r = col + 1; r < n; ++r)
            if (m.get(r, col)) m.row(r) ^= m.row(col);
    }
    return true;
}

BitMatrix invert_gf2(const BitMatrix& input) {
    if (!input.is_square()) fail(ErrorCode::ShapeError, "inverse of a non-square matrix");
    const std::size_t n = input.rows();
    BitMatrix m = input;
    BitMatrix inv = BitMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && !m.get(piv, col)) ++piv;
        if (piv == n) fail(ErrorCode::Singular, "matrix is singular over GF(2)");
        std::swap(m.row(piv), m.row(col));
        std::swap(inv.row(piv), inv.row(col));
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && m.get(r, col)) {
                m.row(r) ^= m.row(col);
                inv.row(r) ^= inv.row(col);
            }
        }
    }
    return inv;
}

BitMatrix power_gf2(const BitMatrix& m, const Natural& exp) {
    if (!m.is_square()) fail(ErrorCode::ShapeError, "power of a non-square matrix");
    BitMatrix result = BitMatrix::identity(m.rows());
    const std::size_t nbits = sgn(exp) == 0 ? 0 : mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = nbits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = result * m;
    }
    return result;
}

}  // namespace lcarev
