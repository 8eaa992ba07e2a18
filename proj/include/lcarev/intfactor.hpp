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

#ifndef LCAREV_INTFACTOR_HPP
#define LCAREV_INTFACTOR_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "lcarev/error.hpp"
#include "lcarev/natural.hpp"

namespace lcarev {

struct PrimePower {
    Natural prime;
    unsigned exponent = 1;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// value == product of prime^exponent, primes strictly increasing.
struct FactoredInt {
    Natural value;
    std::vector<PrimePower> factors;

    Natural product() const;
    friend bool operator==(const FactoredInt&, const FactoredInt&) = default;
};

/// Raised when factor_int runs out of time. `partial` holds the primes found
/// so far; `unfactored` the composite cofactors still pending.
class FactorTimeoutError : public Error {
public:
    FactorTimeoutError(FactoredInt partial, std::vector<Natural> unfactored);

    const FactoredInt& partial() const noexcept { return partial_; }
    const std::vector<Natural>& unfactored() const noexcept { return unfactored_; }

private:
    FactoredInt partial_;
    std::vector<Natural> unfactored_;
};

/// Deterministic below 2^64 (first twelve prime bases); above that, 64 extra
/// pseudo-random bases bound the error by 4^-64.
bool is_prime(const Natural& n);

/// Factorizations keyed by the decimal string of the value. Reads may run
/// concurrently; inserts take an exclusive lock and are idempotent.
///
/// File format: JSON object mapping "value" to [["prime", exponent], ...].
class FactorCache {
public:
    FactorCache() = default;
    FactorCache(const FactorCache& other);
    FactorCache& operator=(const FactorCache& other);

    /// The factorizations of 2^n - 1 for n <= 128 compiled into the library.
    static const FactorCache& bundled();

    static FactorCache load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    /// Merges entries from a JSON document in the cache file format.
    void merge_json(const std::string& text);

    std::optional<FactoredInt> lookup(const Natural& n) const;
    void insert(const FactoredInt& f);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::vector<PrimePower>> entries_;
};

struct FactorOptions {
    /// Wall-clock budget in seconds; <= 0 means unlimited.
    double budget_seconds = 30.0;
    /// Consulted before the bundled table and updated with new results.
    FactorCache* cache = nullptr;
    bool use_bundled = true;
};

/// Cache lookup, then trial division below 10^5, then Pollard rho with
/// Brent's cycle detection on what remains.
FactoredInt factor_int(const Natural& n, const FactorOptions& opts = {});

/// Euler's totient from a factorization.
Natural euler_phi(const FactoredInt& f);

/// Least k >= 1 with 2^k == 1 (mod m), m odd. ord(2 mod 1) is 1.
Natural multiplicative_order_of_2(const Natural& m, const FactorOptions& opts = {});

}  // namespace lcarev

#endif
