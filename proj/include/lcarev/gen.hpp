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

#ifndef LCAREV_GEN_HPP
#define LCAREV_GEN_HPP

// Inverse problem: rules whose period of reversibility is a requested T.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lcarev/deadline.hpp"
#include "lcarev/gf2poly.hpp"
#include "lcarev/intfactor.hpp"
#include "lcarev/natural.hpp"
#include "lcarev/period.hpp"
#include "lcarev/rule.hpp"

namespace lcarev {

/// Upper bound on the degree of any polynomial gen emits or lifts to.
inline constexpr std::size_t kGenDegreeCap = 128;
/// Above this phi(m) the cyclotomic polynomial is not factored directly.
inline constexpr std::size_t kCyclotomicFactorCap = 2048;
/// Refuse to list more irreducibles of one period than this.
inline constexpr std::size_t kMaxListedIrreducibles = std::size_t{1} << 16;

/// T = 2^t * prod m_i^e_i with distinct odd primes m_i.
struct PeriodSpec {
    Natural T;
    unsigned t = 0;
    std::vector<PrimePower> odd_part;

    std::size_t r() const noexcept { return odd_part.size(); }
    Natural odd_value() const;
};

PeriodSpec decompose_period(const Natural& T, const FactorOptions& opts = {});

/// phi(m) / ord_m(2); 1 for m = 1. NotOdd for even m.
Natural count_irreducibles_with_period(const Natural& m, const FactorOptions& opts = {});

struct IrreducibleOptions {
    PeriodOptions period{kGenDegreeCap, {}};
    /// Consulted first and extended with every list computed.
    PeriodTable* table = nullptr;
};

/// Every irreducible polynomial of period exactly m, sorted ascending.
std::vector<Poly> irreducibles_with_period(const Natural& m, const IrreducibleOptions& opts = {});

/// One irreducible of period exactly m: the smallest when the full list is
/// cheap, otherwise the minimal polynomial of a primitive m-th root of unity.
Poly one_irreducible_with_period(const Natural& m, const IrreducibleOptions& opts = {});

/// Minimal polynomials of all primitive m-th roots of unity, found by
/// working in GF(2^d) with d = ord_m(2). Independent of factoring.
std::vector<Poly> irreducibles_with_period_by_roots(const Natural& m, const IrreducibleOptions& opts = {});

/// Smallest irreducible factor of f(x^m) whose period is m * period(f).
Poly lift_prime_power(const Poly& f, const Natural& m, const IrreducibleOptions& opts = {});

/// Exponents s for which (x+1)^s has period 2^t.
std::pair<Natural, Natural> power_of_two_exponent_range(unsigned t);

/// Lower bound on the number of polynomials of period T, given g per odd
/// prime power (in the order of spec.odd_part).
Natural count_lower_bound(const PeriodSpec& spec, const std::vector<Natural>& g);

enum class GMode {
    Exact,  ///< every irreducible of period m_i^e_i
    Paper,  ///< a single irreducible per prime power, g = 1
};

enum class GenStrategy {
    Construction,  ///< one irreducible per odd prime power, exponent vectors
    Complete,      ///< every product of irreducibles with period dividing U
};

struct GenOptions {
    GMode g_mode = GMode::Exact;
    GenStrategy strategy = GenStrategy::Construction;
    std::optional<std::size_t> limit;
    /// Skip products above this degree. Without it, a product above
    /// kGenDegreeCap is an error.
    std::optional<std::size_t> max_degree;
    bool all_splits = false;
    PeriodTable* table = nullptr;
    FactorOptions factor;
    Deadline deadline;
};

struct GValue {
    Natural modulus;
    Natural g;
};

struct GenEntry {
    Poly poly;
    /// Symmetric split first; every bilateral split when requested.
    std::vector<Rule> rules;
};

struct GenOutput {
    PeriodSpec spec;
    std::vector<GenEntry> entries;
    Natural lower_bound;
    std::vector<GValue> g_values;
    bool truncated = false;
};

GenOutput generate_polynomials(const Natural& T, const GenOptions& opts = {});

}  // namespace lcarev

#endif
