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

#ifndef LCAREV_BITVEC_HPP
#define LCAREV_BITVEC_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcarev {

/// Fixed-length bit sequence packed into 64-bit words. Bit k lives in word
/// k / 64 at position k % 64. Bits past size() are always zero.
class BitVec {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t n) : size_(n), words_(word_count(n), 0) {}

    /// Parses a '0'/'1' string, character i becoming bit i.
    static BitVec from_string(std::string_view bits);

    static constexpr std::size_t word_count(std::size_t n) { return (n + word_bits - 1) / word_bits; }

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool get(std::size_t i) const {
        assert(i < size_);
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }
    void set(std::size_t i, bool v = true) {
        assert(i < size_);
        const word_type mask = word_type{1} << (i % word_bits);
        if (v)
            words_[i / word_bits] |= mask;
        else
            words_[i / word_bits] &= ~mask;
    }
    void flip(std::size_t i) {
        assert(i < size_);
        words_[i / word_bits] ^= word_type{1} << (i % word_bits);
    }
    bool operator[](std::size_t i) const { return get(i); }

    BitVec& operator^=(const BitVec& o) {
        assert(o.size_ == size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    /// Parity of popcount(this AND o).
    bool dot(const BitVec& o) const {
        assert(o.size_ == size_);
        word_type acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return std::popcount(acc) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    /// Drops bit 0, moves every other bit down one place and writes `in` at
    /// the top position.
    void shift_down_push(bool in);

    std::span<const word_type> words() const noexcept { return words_; }
    std::span<word_type> words() noexcept { return words_; }

    /// Character i is bit i.
    std::string to_string() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

}  // namespace lcarev

#endif
