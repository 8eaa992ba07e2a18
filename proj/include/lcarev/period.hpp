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

#ifndef LCAREV_PERIOD_HPP
#define LCAREV_PERIOD_HPP

#include <cstddef>
#include <filesystem>
#include <shared_mutex>
#include <vector>

#include "lcarev/gf2poly.hpp"
#include "lcarev/intfactor.hpp"
#include "lcarev/natural.hpp"
#include "lcarev/rule.hpp"

namespace lcarev {

/// Largest irreducible degree whose period is computed by default. 2^64 - 1
/// is covered by the bundled factor table; the limit is a factoring budget,
/// not an arithmetic one.
inline constexpr std::size_t kDefaultPeriodDegreeCap = 64;
inline constexpr std::size_t kBruteForcePeriodDegreeCap = 16;

struct PeriodOptions {
    std::size_t degree_cap = kDefaultPeriodDegreeCap;
    FactorOptions factor;
};

struct FactorPeriod {
    Poly factor;
    unsigned multiplicity = 1;
    Natural period;
};

/// period == lcm(factor periods) * power_part, where power_part is the least
/// power of two not below any multiplicity.
struct PeriodResult {
    Natural period;
    Natural lcm_part;
    Natural power_part;
    std::vector<FactorPeriod> factor_periods;
};

/// Multiplicative order of x modulo an irreducible f with f(0) = 1. Strips
/// prime factors from 2^deg - 1 while x^(N/p) stays 1.
Natural irreducible_period(const Poly& f, const PeriodOptions& opts = {});

PeriodResult poly_period(const Poly& f, const PeriodOptions& opts = {});

/// Least k >= 1 with x^k == 1 (mod f), by scanning k upward. deg f <= 16.
Natural period_bruteforce(const Poly& f);

/// Period of reversibility of a rule: the period of its polynomial.
PeriodResult rule_period(const Rule& r, const PeriodOptions& opts = {});

/// least power of two >= e
Natural power_of_two_ceiling(unsigned e);

/// Period table cache: irreducible polynomials with their periods.
/// File format: JSON list of {"degree", "poly" (MSB-first bits), "period"}.
class PeriodTable {
public:
    struct Entry {
        std::size_t degree = 0;
        Poly poly;
        Natural period;
    };

    PeriodTable() = default;
    PeriodTable(const PeriodTable& other);
    PeriodTable& operator=(const PeriodTable& other);

    static PeriodTable load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
    std::string to_json() const;

    /// Every irreducible polynomial (other than x) of degree <= max_degree.
    static PeriodTable build(std::size_t max_degree, const PeriodOptions& opts = {});

    /// Inserts unless the polynomial is already present.
    void insert(const Poly& poly, const Natural& period);
    std::vector<Poly> with_period(const Natural& period) const;
    std::vector<Entry> entries() const;
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::vector<Entry> entries_;
};

}  // namespace lcarev

#endif
