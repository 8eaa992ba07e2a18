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

#ifndef LCAREV_BITMATRIX_HPP
#define LCAREV_BITMATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lcarev/bitvec.hpp"
#include "lcarev/deadline.hpp"
#include "lcarev/natural.hpp"

namespace lcarev {

/// Dense matrix over GF(2), one packed BitVec per row.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows() == cols_; }

    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }

    const BitVec& row(std::size_t i) const { return rows_[i]; }
    BitVec& row(std::size_t i) { return rows_[i]; }

    BitMatrix transpose() const;
    BitVec apply(const BitVec& v) const;
    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

    /// One string per row, column 0 first.
    std::vector<std::string> to_strings() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

std::size_t rank_gf2(BitMatrix m);
/// Gaussian elimination with row pivoting; ShapeError if not square.
bool det_gf2(const BitMatrix& m, const Deadline& deadline = {});
/// Singular if the determinant is 0.
BitMatrix invert_gf2(const BitMatrix& m);
BitMatrix power_gf2(const BitMatrix& m, const Natural& exp);

}  // namespace lcarev

#endif
