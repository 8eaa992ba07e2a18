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

#include "lcarev/period.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "lcarev/error.hpp"

namespace lcarev {

namespace {

void require_constant_term(const Poly& f) {
    if (f.is_zero()) fail(ErrorCode::InvalidInput, "the zero polynomial has no period");
    if (!f.constant_term()) fail(ErrorCode::NoConstantTerm, f.to_bits() + " has f(0) = 0");
}

}  // namespace

Natural power_of_two_ceiling(unsigned e) {
    unsigned long t = 0;
    while ((1ul << t) < e) ++t;
    return pow2(t);
}

Natural irreducible_period(const Poly& f, const PeriodOptions& opts) {
    require_constant_term(f);
    const std::size_t n = f.deg();
    if (n == 0) fail(ErrorCode::InvalidInput, "constant polynomial has no period");
    if (n > opts.degree_cap)
        fail(ErrorCode::CapExceeded, "degree " + std::to_string(n) + " exceeds the period degree cap " +
                                         std::to_string(opts.degree_cap));
    if (!is_irreducible(f)) fail(ErrorCode::NotIrreducible, f.to_bits() + " is reducible");

    const Natural group_order = mersenne(n);
    const FactoredInt fac = factor_int(group_order, opts.factor);
    const Poly x = Poly::x();
    Natural order = group_order;
    for (const auto& pp : fac.factors) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            const Natural cand = order / pp.prime;
            if (!poly_powmod(x, cand, f).is_one()) break;
            order = cand;
        }
    }
    return order;
}

PeriodResult poly_period(const Poly& f, const PeriodOptions& opts) {
    require_constant_term(f);
    if (f.deg() == 0) fail(ErrorCode::InvalidInput, "constant polynomial has no period");
    PeriodResult result{1, 1, 1, {}};
    unsigned max_mult = 1;
    for (auto& fp : berlekamp_factor(f)) {
        Natural p = irreducible_period(fp.factor, opts);
        result.lcm_part = lcm(result.lcm_part, p);
        max_mult = std::max(max_mult, fp.multiplicity);
        result.factor_periods.push_back({std::move(fp.factor), fp.multiplicity, std::move(p)});
    }
    result.power_part = power_of_two_ceiling(max_mult);
    result.period = result.lcm_part * result.power_part;
    return result;
}

Natural period_bruteforce(const Poly& f) {
    require_constant_term(f);
    const std::size_t d = f.deg();
    if (d > kBruteForcePeriodDegreeCap)
        fail(ErrorCode::CapExceeded, "brute-force period limited to degree " + std::to_string(kBruteForcePeriodDegreeCap));
    if (d == 0) fail(ErrorCode::InvalidInput, "constant polynomial has no period");
    const std::uint64_t modulus = f.to_u64();
    const std::uint64_t top = std::uint64_t{1} << d;
    std::uint64_t acc = 1;  // x^0
    for (std::uint64_t k = 1;; ++k) {
        acc <<= 1;
        if (acc & top) acc ^= modulus;
        if (acc == 1) return from_u64(k);
        if (k > top) fail(ErrorCode::Undefined, "no period found for " + f.to_bits());
    }
}

PeriodResult rule_period(const Rule& r, const PeriodOptions& opts) {
    const auto normalized = normalize_rule(r);
    return poly_period(rule_to_poly(normalized.rule), opts);
}

// ---------------------------------------------------------------- table

PeriodTable::PeriodTable(const PeriodTable& other) : entries_(other.entries()) {}

PeriodTable& PeriodTable::operator=(const PeriodTable& other) {
    if (this != &other) {
        auto copy = other.entries();
        std::unique_lock lock(mutex_);
        entries_ = std::move(copy);
    }
    return *this;
}

PeriodTable PeriodTable::load(const std::filesystem::path& path) {
    PeriodTable table;
    std::ifstream in(path);
    if (!in) return table;
    std::stringstream ss;
    ss << in.rdbuf();
    if (ss.str().empty()) return table;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("period table is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) fail(ErrorCode::ParseError, "period table must be a JSON list");
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("poly") || !item.contains("period"))
            fail(ErrorCode::ParseError, "period table entries need poly and period");
        const Poly p = Poly::parse(item.at("poly").get<std::string>());
        if (p.is_zero()) fail(ErrorCode::ParseError, "period table contains the zero polynomial");
        if (item.contains("degree") && item.at("degree").get<std::size_t>() != p.deg())
            fail(ErrorCode::ParseError, "period table degree mismatch for " + p.to_bits());
        table.insert(p, parse_natural(item.at("period").get<std::string>()));
    }
    return table;
}

std::string PeriodTable::to_json() const {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& e : entries())
        doc.push_back({{"degree", e.degree}, {"poly", e.poly.to_bits()}, {"period", to_decimal(e.period)}});
    return doc.dump(1);
}

void PeriodTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write period table " + path.string());
    out << to_json() << '\n';
}

PeriodTable PeriodTable::build(std::size_t max_degree, const PeriodOptions& opts) {
    if (max_degree > 24) fail(ErrorCode::CapExceeded, "period table enumeration limited to degree 24");
    PeriodTable table;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        const std::uint64_t lo = (std::uint64_t{1} << d) | 1u;
        const std::uint64_t hi = std::uint64_t{1} << (d + 1);
        for (std::uint64_t bits = lo; bits < hi; bits += 2) {
            const Poly p = Poly::from_u64(bits);
            if (!is_irreducible(p)) continue;
            table.insert(p, irreducible_period(p, opts));
        }
    }
    return table;
}

void PeriodTable::insert(const Poly& poly, const Natural& period) {
    std::unique_lock lock(mutex_);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), poly,
                               [](const Entry& e, const Poly& p) { return e.poly < p; });
    if (it != entries_.end() && it->poly == poly) return;
    entries_.insert(it, Entry{poly.deg(), poly, period});
}

std::vector<Poly> PeriodTable::with_period(const Natural& period) const {
    std::shared_lock lock(mutex_);
    std::vector<Poly> out;
    for (const auto& e : entries_)
        if (e.period == period) out.push_back(e.poly);
    return out;
}

std::vector<PeriodTable::Entry> PeriodTable::entries() const {
    std::shared_lock lock(mutex_);
    return entries_;
}

std::size_t PeriodTable::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

}  // namespace lcarev
