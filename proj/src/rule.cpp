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

#include "lcarev/rule.hpp"

#include <cstdint>
#include <vector>

#include "lcarev/bitmatrix.hpp"
#include "lcarev/error.hpp"

namespace lcarev {

Rule::Rule(BitVec coeffs, std::size_t left) : coeffs_(std::move(coeffs)), left_(left) {
    if (coeffs_.empty()) fail(ErrorCode::ParseError, "empty rule");
    if (left_ >= coeffs_.size())
        fail(ErrorCode::SplitError, "left split " + std::to_string(left_) + " out of range for a rule of size " +
                                        std::to_string(coeffs_.size()));
}

bool Rule::lambda(long offset) const noexcept {
    const long k = offset + static_cast<long>(left_);
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return false;
    return coeffs_.get(static_cast<std::size_t>(k));
}

bool Rule::is_normalized() const {
    if (is_zero()) return false;
    if (left() > 0 && !coeffs_.get(0)) return false;
    if (right() > 0 && !coeffs_.get(size() - 1)) return false;
    return true;
}

Rule parse_rule(std::string_view text, std::optional<std::size_t> left) {
    BitVec bits = BitVec::from_string(text);
    if (bits.empty()) fail(ErrorCode::ParseError, "empty rule");
    return Rule(std::move(bits), left.value_or(default_left(text.size())));
}

Configuration parse_configuration(std::string_view text) { return BitVec::from_string(text); }

NormalizedRule normalize_rule(const Rule& r) {
    if (r.is_zero()) fail(ErrorCode::ZeroRule, "rule " + r.bits() + " has no nonzero coefficient");
    const std::size_t m = r.size();
    std::size_t lead = 0;
    while (lead < r.left() && !r.at(lead)) ++lead;
    std::size_t trail = 0;
    while (trail < r.right() && !r.at(m - 1 - trail)) ++trail;

    BitVec trimmed(m - lead - trail);
    for (std::size_t k = 0; k < trimmed.size(); ++k) trimmed.set(k, r.at(lead + k));
    return {Rule(std::move(trimmed), r.left() - lead), lead};
}

Poly rule_to_poly(const Rule& r) {
    if (r.is_zero()) fail(ErrorCode::ZeroRule, "rule " + r.bits() + " has no nonzero coefficient");
    std::size_t first = 0, last = r.size() - 1;
    while (!r.at(first)) ++first;
    while (!r.at(last)) --last;
    Poly f;
    for (std::size_t k = first; k <= last; ++k)
        if (r.at(k)) f.set_coeff(last - k, true);
    return f;
}

Rule poly_to_rule(const Poly& f, std::size_t left) {
    if (f.is_zero()) fail(ErrorCode::ZeroRule, "the zero polynomial has no rule");
    if (!f.constant_term()) fail(ErrorCode::NoConstantTerm, f.to_bits() + " has f(0) = 0");
    const std::size_t d = f.deg();
    if (left > d)
        fail(ErrorCode::SplitError, "left split " + std::to_string(left) + " out of range for degree " + std::to_string(d));
    return Rule(BitVec::from_string(f.to_bits()), left);
}

Configuration step_config(const Rule& r, const Configuration& c) {
    const std::size_t n = c.size();
    Configuration next(n);
    const long rl = static_cast<long>(r.left()), rr = static_cast<long>(r.right());
    for (std::size_t i = 0; i < n; ++i) {
        bool acc = false;
        for (long j = -rl; j <= rr; ++j) {
            const long cell = static_cast<long>(i) + j;
            if (cell < 0 || cell >= static_cast<long>(n)) continue;
            acc ^= r.lambda(j) && c.get(static_cast<std::size_t>(cell));
        }
        next.set(i, acc);
    }
    return next;
}

namespace {

// Image of a configuration packed into a word (bit i = s_{i+1}), n <= 63.
std::uint64_t step_word(const Rule& r, std::uint64_t c, std::size_t n) {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    std::uint64_t out = 0;
    const long rl = static_cast<long>(r.left()), rr = static_cast<long>(r.right());
    for (long j = -rl; j <= rr; ++j) {
        if (!r.lambda(j)) continue;
        if (j >= 64 || -j >= 64) continue;
        out ^= j >= 0 ? (c >> j) : ((c << -j) & mask);
    }
    return out & mask;
}

}  // namespace

bool injective_bruteforce(const Rule& r, std::size_t n, InjectivityMode mode, std::size_t cap) {
    if (n == 0) fail(ErrorCode::InvalidInput, "cell count must be positive");
    if (n > cap) fail(ErrorCode::CapExceeded, "brute force limited to n <= " + std::to_string(cap));

    if (mode == InjectivityMode::KernelBasis) {
        BitMatrix images(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Configuration unit(n);
            unit.set(j);
            const auto img = step_config(r, unit);
            for (std::size_t i = 0; i < n; ++i) images.set(i, j, img.get(i));
        }
        return rank_gf2(images) == n;
    }

    if (n >= 63) fail(ErrorCode::CapExceeded, "enumeration needs n < 63");
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::uint64_t> seen((total + 63) / 64, 0);
    for (std::uint64_t c = 0; c < total; ++c) {
        const std::uint64_t img = step_word(r, c, n);
        std::uint64_t& w = seen[img / 64];
        const std::uint64_t bit = std::uint64_t{1} << (img % 64);
        if (w & bit) return false;
        w |= bit;
    }
    return true;
}

std::optional<bool> unilateral_reversibility(const Rule& r) {
    if (r.is_bilateral()) return std::nullopt;
    return r.center();
}

}  // namespace lcarev
