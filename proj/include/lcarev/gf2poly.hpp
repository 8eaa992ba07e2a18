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

#ifndef LCAREV_GF2POLY_HPP
#define LCAREV_GF2POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcarev/natural.hpp"

namespace lcarev {

/// Largest degree any arithmetic result may reach before CapExceeded.
inline constexpr std::size_t kMaxPolyDegree = 4096;

/// Polynomial over GF(2). Coefficient of x^k is bit k of the packed words;
/// the highest stored word is nonzero, so the zero polynomial has no words.
class Poly {
public:
    using word_type = std::uint64_t;

    Poly() = default;

    static Poly zero() { return {}; }
    static Poly one() { return monomial(0); }
    static Poly x() { return monomial(1); }
    static Poly monomial(std::size_t k);
    /// Sum of x^e for each listed exponent (repeated exponents cancel).
    static Poly from_exponents(std::initializer_list<std::size_t> exps);
    static Poly from_u64(std::uint64_t bits);
    static Poly from_words(std::vector<word_type> words);

    /// Accepts an MSB-first bit string ("1011") or a sparse sum ("x^3+x+1").
    static Poly parse(std::string_view text);

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
    /// Empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    /// Degree of a nonzero polynomial.
    std::size_t deg() const;

    bool coeff(std::size_t k) const noexcept {
        const std::size_t w = k / 64;
        return w < words_.size() && ((words_[w] >> (k % 64)) & 1u);
    }
    void set_coeff(std::size_t k, bool v);
    bool constant_term() const noexcept { return coeff(0); }
    std::size_t weight() const noexcept;

    std::span<const word_type> words() const noexcept { return words_; }
    /// Requires degree < 64.
    std::uint64_t to_u64() const;

    /// MSB-first bit string; "0" for the zero polynomial.
    std::string to_bits() const;
    /// Sparse form, highest term first, e.g. "x^6+x^4+x^3+x+1".
    std::string to_sparse() const;

    friend bool operator==(const Poly&, const Poly&) = default;
    /// Canonical order: by degree, then by the numeric value of the bits.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

    Poly& operator+=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator*(const Poly& a, const Poly& b);

private:
    explicit Poly(std::vector<word_type> w) : words_(std::move(w)) { trim(); }
    void trim();

    std::vector<word_type> words_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

struct FactorPower {
    Poly factor;
    unsigned multiplicity = 1;

    friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Irreducible monic factors with multiplicities, sorted canonically.
using Factorization = std::vector<FactorPower>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_square(const Poly& a);
DivRem poly_divrem(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& modulus);
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus);
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_powmod(const Poly& base, const Natural& exp, const Poly& modulus);
Poly poly_pow(const Poly& base, unsigned exp);
Poly poly_derivative(const Poly& f);

/// Square root of a polynomial whose odd coefficients are all zero.
Poly poly_sqrt(const Poly& f);
/// x^deg f * f(1/x).
Poly poly_reciprocal(const Poly& f);
/// f(x^m).
Poly poly_compose_power(const Poly& f, std::size_t m);

/// Squarefree parts with multiplicities, sorted by multiplicity. Parts are
/// pairwise coprime but not necessarily irreducible.
std::vector<FactorPower> squarefree_decompose(const Poly& f);
Factorization berlekamp_factor(const Poly& f);
/// Rabin's test, independent of the Berlekamp path.
bool is_irreducible(const Poly& f);
/// Product of factor^multiplicity.
Poly expand(std::span<const FactorPower> factors);

}  // namespace lcarev

#endif
