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

#include "lcarev/gen.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "lcarev/error.hpp"

namespace lcarev {

namespace {

void require_odd(const Natural& m) {
    if (m < 1) fail(ErrorCode::InvalidInput, "period must be positive");
    if (mpz_even_p(m.get_mpz_t())) fail(ErrorCode::NotOdd, "irreducible periods are odd, got " + to_decimal(m));
}

std::size_t order_within_cap(const Natural& m, const IrreducibleOptions& opts) {
    const Natural d = multiplicative_order_of_2(m, opts.period.factor);
    if (d > opts.period.degree_cap)
        fail(ErrorCode::CapExceeded, "irreducibles of period " + to_decimal(m) + " have degree " + to_decimal(d) +
                                         ", above the cap " + std::to_string(opts.period.degree_cap));
    return static_cast<std::size_t>(to_u64(d));
}

bool cyclotomic_is_cheap(const Natural& m, const FactorOptions& fopts) {
    if (m > kMaxPolyDegree) return false;
    return euler_phi(factor_int(m, fopts)) <= kCyclotomicFactorCap;
}

// Product of the cyclotomic factors of x^m + 1 of exact order m.
Poly cyclotomic(const Natural& m, const FactorOptions& fopts) {
    const auto mm = static_cast<std::size_t>(to_u64(m));
    Poly c = Poly::monomial(mm) + Poly::one();
    for (const auto& pp : factor_int(m, fopts).factors) {
        const auto sub = static_cast<std::size_t>(to_u64(m / pp.prime));
        c = poly_divrem(c, poly_gcd(c, Poly::monomial(sub) + Poly::one())).quotient;
    }
    return c;
}

// Exact order m of g modulo h, from the primes of m alone; 2^d - 1 is
// never factored.
bool has_exact_order(const Poly& g, const Natural& m, const std::vector<PrimePower>& primes, const Poly& h) {
    if (!poly_powmod(g, m, h).is_one()) return false;
    for (const auto& pp : primes)
        if (poly_powmod(g, m / pp.prime, h).is_one()) return false;
    return true;
}

// A primitive m-th root of unity in GF(2^d) = GF(2)[x]/(h).
struct FieldWithRoot {
    Poly modulus;
    Poly root;
};

FieldWithRoot field_containing_order(std::size_t d, const Natural& m, const IrreducibleOptions& opts) {
    const auto primes = factor_int(m, opts.period.factor).factors;
    const Natural cofactor = (pow2(d) - 1) / m;
    for (std::uint64_t low = 1; low < (std::uint64_t{1} << 24); low += 2) {
        const Poly h = Poly::monomial(d) + Poly::from_u64(low);
        if (!is_irreducible(h)) continue;
        Poly root = poly_powmod(Poly::x(), cofactor, h);
        if (has_exact_order(root, m, primes, h)) return {h, std::move(root)};
    }
    fail(ErrorCode::Undefined, "no field of degree " + std::to_string(d) + " found for period " + to_decimal(m));
}

// Minimal polynomial over GF(2) of g in GF(2)[x]/(h).
Poly minimal_polynomial(const Poly& g, const Poly& h) {
    std::vector<Poly> coeffs{Poly::one()};  // coeffs[k] multiplies X^k
    Poly conj = g;
    do {
        std::vector<Poly> next(coeffs.size() + 1);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] += poly_mulmod(coeffs[k], conj, h);
        }
        coeffs = std::move(next);
        conj = poly_mod(poly_square(conj), h);
    } while (conj != g);
    Poly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        if (!coeffs[k].is_one()) fail(ErrorCode::Undefined, "minimal polynomial has a coefficient outside GF(2)");
        out.set_coeff(k, true);
    }
    return out;
}

void remember(const IrreducibleOptions& opts, const std::vector<Poly>& polys, const Natural& m) {
    if (!opts.table) return;
    for (const auto& p : polys) opts.table->insert(p, m);
}

std::vector<Rule> rules_for(const Poly& p, bool all_splits) {
    const std::size_t size = p.deg() + 1;
    std::vector<Rule> rules{poly_to_rule(p, default_left(size))};
    if (all_splits && size >= 3)
        for (std::size_t left = 1; left + 1 < size; ++left)
            if (left != default_left(size)) rules.push_back(poly_to_rule(p, left));
    return rules;
}

std::vector<Natural> divisors(const std::vector<PrimePower>& factors) {
    std::vector<Natural> out{1};
    for (const auto& pp : factors) {
        const std::size_t base = out.size();
        Natural power = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Natural PeriodSpec::odd_value() const {
    Natural u = 1;
    for (const auto& pp : odd_part) {
        Natural p;
        mpz_pow_ui(p.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        u *= p;
    }
    return u;
}

PeriodSpec decompose_period(const Natural& T, const FactorOptions& opts) {
    if (T < 1) fail(ErrorCode::InvalidInput, "period must be at least 1");
    PeriodSpec spec;
    spec.T = T;
    spec.t = static_cast<unsigned>(mpz_scan1(T.get_mpz_t(), 0));
    const Natural odd = T >> spec.t;
    if (odd > 1) spec.odd_part = factor_int(odd, opts).factors;
    return spec;
}

Natural count_irreducibles_with_period(const Natural& m, const FactorOptions& opts) {
    require_odd(m);
    if (m == 1) return 1;
    return euler_phi(factor_int(m, opts)) / multiplicative_order_of_2(m, opts);
}

std::vector<Poly> irreducibles_with_period(const Natural& m, const IrreducibleOptions& opts) {
    require_odd(m);
    if (m == 1) return {Poly::from_u64(0b11)};
    order_within_cap(m, opts);
    const Natural g = count_irreducibles_with_period(m, opts.period.factor);
    if (opts.table) {
        auto cached = opts.table->with_period(m);
        if (cached.size() == g) return cached;
    }
    if (!cyclotomic_is_cheap(m, opts.period.factor)) return irreducibles_with_period_by_roots(m, opts);

    const auto primes = factor_int(m, opts.period.factor).factors;
    std::vector<Poly> out;
    for (auto& fp : berlekamp_factor(cyclotomic(m, opts.period.factor))) {
        if (!has_exact_order(Poly::x(), m, primes, fp.factor))
            fail(ErrorCode::Undefined, "cyclotomic factor " + fp.factor.to_bits() + " has the wrong period");
        out.push_back(std::move(fp.factor));
    }
    if (out.size() != g) fail(ErrorCode::Undefined, "cyclotomic factor count disagrees with phi(m)/ord_m(2)");
    std::sort(out.begin(), out.end());
    remember(opts, out, m);
    return out;
}

std::vector<Poly> irreducibles_with_period_by_roots(const Natural& m, const IrreducibleOptions& opts) {
    require_odd(m);
    if (m == 1) return {Poly::from_u64(0b11)};
    const std::size_t d = order_within_cap(m, opts);
    const Natural g = count_irreducibles_with_period(m, opts.period.factor);
    if (g > kMaxListedIrreducibles || !fits_u64(m) || m > (Natural(1) << 32))
        fail(ErrorCode::CapExceeded, to_decimal(g) + " irreducibles of period " + to_decimal(m) + " is too many to list");

    const FieldWithRoot field = field_containing_order(d, m, opts);
    const Poly& root = field.root;
    const std::uint64_t mm = to_u64(m);

    std::vector<Poly> out;
    std::vector<bool> visited(mm, false);
    for (std::uint64_t j = 1; j < mm; ++j) {
        if (visited[j] || std::gcd(j, mm) != 1) continue;
        for (std::uint64_t c = j; !visited[c]; c = (c * 2) % mm) visited[c] = true;
        out.push_back(minimal_polynomial(poly_powmod(root, from_u64(j), field.modulus), field.modulus));
    }
    std::sort(out.begin(), out.end());
    remember(opts, out, m);
    return out;
}

Poly one_irreducible_with_period(const Natural& m, const IrreducibleOptions& opts) {
    require_odd(m);
    if (m == 1) return Poly::from_u64(0b11);
    const std::size_t d = order_within_cap(m, opts);
    if (opts.table) {
        auto cached = opts.table->with_period(m);
        if (!cached.empty()) return cached.front();
    }
    if (cyclotomic_is_cheap(m, opts.period.factor)) return irreducibles_with_period(m, opts).front();
    const FieldWithRoot field = field_containing_order(d, m, opts);
    Poly p = minimal_polynomial(field.root, field.modulus);
    remember(opts, {p}, m);
    return p;
}

Poly lift_prime_power(const Poly& f, const Natural& m, const IrreducibleOptions& opts) {
    if (!is_prime(m) || m == 2) fail(ErrorCode::InvalidInput, "lifting needs an odd prime, got " + to_decimal(m));
    const Natural target = irreducible_period(f, opts.period) * m;
    if (!fits_u64(m) || f.deg() * to_u64(m) > kMaxPolyDegree)
        fail(ErrorCode::CapExceeded, "f(x^" + to_decimal(m) + ") exceeds the polynomial degree cap");
    const Poly composed = poly_compose_power(f, static_cast<std::size_t>(to_u64(m)));
    for (const auto& fp : berlekamp_factor(composed)) {  // ascending order
        if (fp.factor.deg() > opts.period.degree_cap)
            fail(ErrorCode::CapExceeded, "lifted factor of degree " + std::to_string(fp.factor.deg()) +
                                             " exceeds the cap " + std::to_string(opts.period.degree_cap));
        if (irreducible_period(fp.factor, opts.period) == target) {
            if (opts.table) opts.table->insert(fp.factor, target);
            return fp.factor;
        }
    }
    fail(ErrorCode::Undefined, "no factor of period " + to_decimal(target) + " in f(x^" + to_decimal(m) + ")");
}

std::pair<Natural, Natural> power_of_two_exponent_range(unsigned t) {
    if (t == 0) return {1, 1};
    return {pow2(t - 1) + 1, pow2(t)};
}

Natural count_lower_bound(const PeriodSpec& spec, const std::vector<Natural>& g) {
    if (g.size() != spec.r()) fail(ErrorCode::InvalidInput, "need one g value per odd prime power");
    Natural prod = 1;
    for (const auto& v : g) {
        if (v < 1) fail(ErrorCode::InvalidInput, "g values must be positive");
        prod *= v;
    }
    const unsigned long t = spec.t, r = spec.r();
    if (r == 0) return t == 0 ? Natural(1) : pow2(t - 1);
    if (t == 0) return 2 * prod;
    return pow2(t) * (pow2(t * r) - pow2((t - 1) * r)) * prod + pow2(t * r) * prod;
}

GenOutput generate_polynomials(const Natural& T, const GenOptions& opts) {
    GenOutput out;
    out.spec = decompose_period(T, opts.factor);
    const PeriodSpec& spec = out.spec;
    IrreducibleOptions iopts{{kGenDegreeCap, opts.factor}, opts.table};
    const std::size_t degree_limit = opts.max_degree.value_or(kGenDegreeCap);

    auto over_limit = [&](std::size_t degree) {
        if (degree <= degree_limit) return false;
        if (opts.max_degree || opts.strategy == GenStrategy::Complete) return true;
        fail(ErrorCode::CapExceeded, "period " + to_decimal(T) + " needs polynomials above degree " +
                                         std::to_string(kGenDegreeCap) + "; pass a maximum degree to filter");
    };

    std::vector<Natural> g_used;
    for (const auto& pp : spec.odd_part) {
        Natural modulus;
        mpz_pow_ui(modulus.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        const Natural g = opts.g_mode == GMode::Paper ? Natural(1)
                                                      : count_irreducibles_with_period(modulus, opts.factor);
        out.g_values.push_back({modulus, g});
        g_used.push_back(g);
    }
    out.lower_bound = count_lower_bound(spec, g_used);

    // Every valid multiplicity vector has its maximum in (2^(t-1), 2^t].
    const Natural top = pow2(spec.t);
    const Natural floor_max = spec.t == 0 ? Natural(0) : pow2(spec.t - 1);
    if (floor_max + 1 > degree_limit) {
        over_limit(to_u64(std::min<Natural>(floor_max + 1, Natural(kMaxPolyDegree + 1))));
        return out;
    }
    const unsigned V = static_cast<unsigned>(to_u64(top));  // <= 256 here
    const unsigned half = static_cast<unsigned>(to_u64(floor_max));

    PeriodOptions verify{kGenDegreeCap, opts.factor};
    std::set<Poly> found;
    bool stop = false;
    auto emit = [&](const std::vector<std::pair<const Poly*, unsigned>>& parts) {
        Poly p = Poly::one();
        for (const auto& [f, a] : parts)
            if (a > 0) p = p * poly_pow(*f, a);
        const Natural got = poly_period(p, verify).period;
        if (got != T)
            fail(ErrorCode::Undefined, "internal: generated " + p.to_bits() + " has period " + to_decimal(got));
        found.insert(std::move(p));
        if (opts.limit && found.size() >= *opts.limit) {
            stop = true;
            out.truncated = true;
        }
    };

    const Poly x_plus_1 = Poly::from_u64(0b11);
    std::vector<std::pair<const Poly*, unsigned>> parts;

    if (opts.strategy == GenStrategy::Construction) {
        std::vector<std::vector<Poly>> lists;
        for (std::size_t i = 0; i < spec.r(); ++i) {
            const Natural& modulus = out.g_values[i].modulus;
            if (opts.g_mode == GMode::Exact) {
                lists.push_back(irreducibles_with_period(modulus, iopts));
                continue;
            }
            // g = 1 mode: a base polynomial of period m, lifted e - 1 times.
            const auto& pp = spec.odd_part[i];
            Poly f = one_irreducible_with_period(pp.prime, iopts);
            for (unsigned e = 1; e < pp.exponent; ++e) f = lift_prime_power(f, pp.prime, iopts);
            lists.push_back({std::move(f)});
        }

        // Odd factors first, then the (x+1)^a0 factor.
        std::function<void(std::size_t, std::size_t, unsigned)> rec = [&](std::size_t i, std::size_t degree,
                                                                           unsigned max_mult) {
            if (stop) return;
            opts.deadline.tick();
            if (i == spec.r()) {
                for (unsigned a0 = 0; a0 <= V && !stop; ++a0) {
                    // Below 2^t the odd factors must carry the maximum; with
                    // no odd factors (x+1)^a0 alone must.
                    const bool ok = spec.r() == 0 ? a0 > half : (a0 == V || max_mult > half);
                    if (!ok) continue;
                    if (over_limit(degree + a0)) break;
                    parts.emplace_back(&x_plus_1, a0);
                    emit(parts);
                    parts.pop_back();
                }
                return;
            }
            for (const Poly& f : lists[i]) {
                for (unsigned a = 1; a <= V && !stop; ++a) {
                    const std::size_t next = degree + a * f.deg();
                    if (over_limit(next)) break;
                    parts.emplace_back(&f, a);
                    rec(i + 1, next, std::max(max_mult, a));
                    parts.pop_back();
                }
            }
        };
        rec(0, 0, 0);
    } else {
        struct Item {
            Poly poly;
            Natural period;
        };
        std::vector<Item> items;
        const Natural U = spec.odd_value();
        for (const Natural& d : divisors(spec.odd_part)) {
            if (multiplicative_order_of_2(d, opts.factor) > degree_limit) continue;
            for (auto& p : irreducibles_with_period(d, iopts)) items.push_back({std::move(p), d});
        }
        std::function<void(std::size_t, std::size_t, unsigned, const Natural&)> rec =
            [&](std::size_t i, std::size_t degree, unsigned max_mult, const Natural& l) {
                if (stop) return;
                opts.deadline.tick();
                if (i == items.size()) {
                    if (l == U && max_mult > half) emit(parts);
                    return;
                }
                rec(i + 1, degree, max_mult, l);
                const Item& it = items[i];
                for (unsigned a = 1; a <= V && !stop; ++a) {
                    const std::size_t next = degree + a * it.poly.deg();
                    if (next > degree_limit) break;
                    parts.emplace_back(&it.poly, a);
                    rec(i + 1, next, std::max(max_mult, a), lcm(l, it.period));
                    parts.pop_back();
                }
            };
        rec(0, 0, 0, Natural(1));
    }

    for (const Poly& p : found) out.entries.push_back({p, rules_for(p, opts.all_splits)});
    return out;
}

}  // namespace lcarev
