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

#include "lcarev/bitvec.hpp"

#include "lcarev/error.hpp"

namespace lcarev {

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            fail(ErrorCode::ParseError, "expected a 0/1 string, got '" + std::string(bits) + "'");
    }
    return v;
}

void BitVec::shift_down_push(bool in) {
    if (size_ == 0) return;
    const std::size_t nw = words_.size();
    for (std::size_t w = 0; w + 1 < nw; ++w) words_[w] = (words_[w] >> 1) | (words_[w + 1] << 63);
    words_[nw - 1] >>= 1;
    if (in) set(size_ - 1);
}

std::string BitVec::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

}  // namespace lcarev
