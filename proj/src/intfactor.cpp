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

#include "lcarev/intfactor.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

#include <json.hpp>

#include "lcarev/deadline.hpp"

namespace lcarev {

extern const char* const kBundledFactorTable;  // generated from data/mersenne_factors.json

namespace {

constexpr unsigned kTrialLimit = 100000;

const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        std::vector<bool> sieve(kTrialLimit, true);
        std::vector<unsigned> ps;
        for (unsigned i = 2; i < kTrialLimit; ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (unsigned long j = static_cast<unsigned long>(i) * i; j < kTrialLimit; j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

bool miller_rabin_round(const Natural& n, const Natural& d, unsigned long s, const Natural& a) {
    Natural x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Natural nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

void normalize(FactoredInt& f) {
    std::sort(f.factors.begin(), f.factors.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
    std::vector<PrimePower> merged;
    for (auto& pp : f.factors) {
        if (!merged.empty() && merged.back().prime == pp.prime)
            merged.back().exponent += pp.exponent;
        else
            merged.push_back(pp);
    }
    f.factors = std::move(merged);
}

// One Brent cycle search with polynomial x^2 + c. Returns a nontrivial
// divisor or n itself on failure.
Natural brent(const Natural& n, unsigned long c, const Deadline& deadline) {
    const unsigned long m = 128;
    Natural y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    auto f = [&](Natural& v) {
        v = v * v + c;
        v %= n;
    };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            deadline.check(ErrorCode::FactorTimeout);
            ys = y;
            const unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                f(y);
                Natural diff = x > y ? Natural(x - y) : Natural(y - x);
                q = (q * diff) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        // Backtrack one step at a time from the saved position.
        do {
            f(ys);
            Natural diff = x > ys ? Natural(x - ys) : Natural(ys - x);
            g = gcd(diff, n);
        } while (g == 1);
    }
    return g;
}

struct Splitter {
    const Deadline& deadline;
    FactoredInt found;
    std::vector<Natural> pending;

    void run() {
        while (!pending.empty()) {
            Natural n = pending.back();
            if (n == 1) {
                pending.pop_back();
                continue;
            }
            if (is_prime(n)) {
                found.factors.push_back({n, 1});
                pending.pop_back();
                continue;
            }
            // Perfect powers defeat rho; peel them first.
            if (mpz_perfect_power_p(n.get_mpz_t())) {
                const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
                bool split = false;
                for (unsigned long k = 2; k <= bits && !split; ++k) {
                    Natural root;
                    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                        pending.pop_back();
                        for (unsigned long i = 0; i < k; ++i) pending.push_back(root);
                        split = true;
                    }
                }
                if (split) continue;
            }
            Natural d = n;
            for (unsigned long c = 1; d == n; ++c) d = brent(n, c, deadline);
            pending.pop_back();
            pending.push_back(d);
            pending.push_back(Natural(n / d));
        }
    }
};

std::string json_key(const Natural& n) { return to_decimal(n); }

std::vector<PrimePower> parse_entry(const nlohmann::json& list) {
    std::vector<PrimePower> out;
    for (const auto& item : list) {
        if (!item.is_array() || item.size() != 2) fail(ErrorCode::ParseError, "malformed factor cache entry");
        out.push_back({parse_natural(item[0].get<std::string>()), item[1].get<unsigned>()});
    }
    return out;
}

}  // namespace

FactorTimeoutError::FactorTimeoutError(FactoredInt partial, std::vector<Natural> unfactored)
    : Error(ErrorCode::FactorTimeout, "factorization of " + to_decimal(partial.value) + " exceeded its time budget"),
      partial_(std::move(partial)),
      unfactored_(std::move(unfactored)) {}

Natural FactoredInt::product() const {
    Natural p = 1;
    for (const auto& pp : factors) {
        Natural t;
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        p *= t;
    }
    return p;
}

bool is_prime(const Natural& n) {
    if (n < 2) return false;
    static const unsigned bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned p : bases) {
        if (n == p) return true;
        if (divides(Natural(p), n)) return false;
    }
    Natural d = n - 1;
    const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned p : bases)
        if (!miller_rabin_round(n, d, s, Natural(p))) return false;
    if (fits_u64(n)) return true;

    std::mt19937_64 rng(0x6c636172657621ULL ^ mpz_get_ui(n.get_mpz_t()));
    gmp_randclass gen(gmp_randinit_default);
    gen.seed(static_cast<unsigned long>(rng()));
    const Natural span = n - 3;
    for (int i = 0; i < 64; ++i) {
        const Natural a = Natural(gen.get_z_range(span)) + 2;
        if (!miller_rabin_round(n, d, s, a)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- cache

FactorCache::FactorCache(const FactorCache& other) {
    std::shared_lock lock(other.mutex_);
    entries_ = other.entries_;
}

FactorCache& FactorCache::operator=(const FactorCache& other) {
    if (this != &other) {
        std::map<std::string, std::vector<PrimePower>> copy;
        {
            std::shared_lock lock(other.mutex_);
            copy = other.entries_;
        }
        std::unique_lock lock(mutex_);
        entries_ = std::move(copy);
    }
    return *this;
}

const FactorCache& FactorCache::bundled() {
    static const FactorCache cache = [] {
        FactorCache c;
        c.merge_json(kBundledFactorTable);
        return c;
    }();
    return cache;
}

FactorCache FactorCache::load(const std::filesystem::path& path) {
    FactorCache c;
    std::ifstream in(path);
    if (!in) return c;  // a missing cache is an empty cache
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    if (!text.empty()) c.merge_json(text);
    return c;
}

void FactorCache::save(const std::filesystem::path& path) const {
    std::shared_lock lock(mutex_);
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [key, factors] : entries_) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& pp : factors) list.push_back({to_decimal(pp.prime), pp.exponent});
        doc[key] = std::move(list);
    }
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write factor cache " + path.string());
    out << doc.dump(1) << '\n';
}

void FactorCache::merge_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("factor cache is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorCode::ParseError, "factor cache must be a JSON object");
    std::unique_lock lock(mutex_);
    for (const auto& [key, list] : doc.items()) {
        FactoredInt f{parse_natural(key), parse_entry(list)};
        if (f.product() != f.value) fail(ErrorCode::ParseError, "factor cache entry for " + key + " does not multiply out");
        entries_[key] = std::move(f.factors);
    }
}

std::optional<FactoredInt> FactorCache::lookup(const Natural& n) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(json_key(n));
    if (it == entries_.end()) return std::nullopt;
    return FactoredInt{n, it->second};
}

void FactorCache::insert(const FactoredInt& f) {
    std::unique_lock lock(mutex_);
    entries_.try_emplace(json_key(f.value), f.factors);
}

std::size_t FactorCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

// ---------------------------------------------------------------- factoring

FactoredInt factor_int(const Natural& n, const FactorOptions& opts) {
    if (n < 1) fail(ErrorCode::InvalidInput, "factor_int requires n >= 1");
    if (opts.cache)
        if (auto hit = opts.cache->lookup(n)) return *hit;
    if (opts.use_bundled)
        if (auto hit = FactorCache::bundled().lookup(n)) return *hit;

    FactoredInt result{n, {}};
    Natural rest = n;
    for (unsigned p : small_primes()) {
        if (Natural(p) * p > rest) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e) result.factors.push_back({Natural(p), e});
    }

    if (rest > 1) {
        const Deadline deadline = opts.budget_seconds > 0 ? Deadline::after(opts.budget_seconds) : Deadline::none();
        Splitter splitter{deadline, {n, {}}, {rest}};
        try {
            splitter.run();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::FactorTimeout) throw;
            for (auto& pp : splitter.found.factors) result.factors.push_back(pp);
            normalize(result);
            throw FactorTimeoutError(result, splitter.pending);
        }
        for (auto& pp : splitter.found.factors) result.factors.push_back(pp);
    }
    normalize(result);
    if (opts.cache) opts.cache->insert(result);
    return result;
}

Natural euler_phi(const FactoredInt& f) {
    Natural phi = 1;
    for (const auto& pp : f.factors) {
        Natural t;
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
        phi *= t * (pp.prime - 1);
    }
    return phi;
}

Natural multiplicative_order_of_2(const Natural& m, const FactorOptions& opts) {
    if (m < 1) fail(ErrorCode::InvalidInput, "modulus must be positive");
    if (!mpz_odd_p(m.get_mpz_t())) fail(ErrorCode::NotOdd, "2 has no multiplicative order modulo an even number");
    if (m == 1) return 1;

    // ord divides phi(m); strip primes of phi while 2^(ord/p) stays 1.
    const FactoredInt mf = factor_int(m, opts);
    FactoredInt phi{euler_phi(mf), {}};
    for (const auto& pp : mf.factors) {
        if (pp.exponent > 1) phi.factors.push_back({pp.prime, pp.exponent - 1});
        for (const auto& q : factor_int(pp.prime - 1, opts).factors) phi.factors.push_back(q);
    }
    normalize(phi);

    Natural order = phi.value;
    const Natural two = 2;
    for (const auto& pp : phi.factors) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            const Natural cand = order / pp.prime;
            Natural r;
            mpz_powm(r.get_mpz_t(), two.get_mpz_t(), cand.get_mpz_t(), m.get_mpz_t());
            if (r != 1) break;
            order = cand;
        }
    }
    return order;
}

}  // namespace lcarev
