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

#ifndef LCAREV_RULE_HPP
#define LCAREV_RULE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "lcarev/bitvec.hpp"
#include "lcarev/gf2poly.hpp"

namespace lcarev {

/// Linear rule lambda_{-rL} .. lambda_0 .. lambda_{rR}. Coefficient k of the
/// stored string is lambda_{k - rL}; the split (rL, rR) is part of identity.
class Rule {
public:
    Rule(BitVec coeffs, std::size_t left);

    std::size_t size() const noexcept { return coeffs_.size(); }
    std::size_t left() const noexcept { return left_; }
    std::size_t right() const noexcept { return coeffs_.size() - 1 - left_; }

    /// lambda_offset for offset in [-rL, rR]; zero outside.
    bool lambda(long offset) const noexcept;
    /// Character k of the coefficient string.
    bool at(std::size_t k) const { return coeffs_.get(k); }
    bool center() const { return coeffs_.get(left_); }
    const BitVec& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const { return coeffs_.none(); }
    bool is_bilateral() const noexcept { return left() > 0 && right() > 0; }
    bool is_unilateral() const noexcept { return !is_bilateral(); }
    /// Border coefficients are 1 on every side that has neighbours.
    bool is_normalized() const;

    std::string bits() const { return coeffs_.to_string(); }

    friend bool operator==(const Rule&, const Rule&) = default;

private:
    BitVec coeffs_;
    std::size_t left_;
};

/// Cell states s_1 .. s_n; bit i holds s_{i+1}. Cells outside are null.
using Configuration = BitVec;

/// floor((m - 1) / 2), the split used when none is given.
constexpr std::size_t default_left(std::size_t m) { return m == 0 ? 0 : (m - 1) / 2; }

Rule parse_rule(std::string_view text, std::optional<std::size_t> left = std::nullopt);
Configuration parse_configuration(std::string_view text);

struct NormalizedRule {
    Rule rule;
    /// Number of positions the left border moved inward.
    std::size_t shift = 0;
};

/// Trims zero border coefficients. Trimming never passes the centre cell, so
/// a one-sided rule with lambda_0 = 0 keeps its zero centre.
NormalizedRule normalize_rule(const Rule& r);

/// MSB-first reading of the coefficient string with zero borders dropped.
Poly rule_to_poly(const Rule& r);
Rule poly_to_rule(const Poly& f, std::size_t left);

Configuration step_config(const Rule& r, const Configuration& c);

enum class InjectivityMode {
    Enumerate,     // all 2^n configurations
    KernelBasis,   // images of the n unit vectors, then rank
};

inline constexpr std::size_t kBruteForceCap = 20;

bool injective_bruteforce(const Rule& r, std::size_t n, InjectivityMode mode = InjectivityMode::Enumerate,
                          std::size_t cap = kBruteForceCap);

/// lambda_0 for one-sided rules (reversible for every n iff it is 1);
/// nullopt for bilateral rules.
std::optional<bool> unilateral_reversibility(const Rule& r);

}  // namespace lcarev

#endif
