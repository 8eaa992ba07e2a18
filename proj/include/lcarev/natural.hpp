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

#ifndef LCAREV_NATURAL_HPP
#define LCAREV_NATURAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lcarev {

/// Arbitrary-precision natural number. Periods, 2^n - 1 and target periods
/// all use this type; negative values never occur.
using Natural = mpz_class;

Natural parse_natural(std::string_view text);
std::string to_decimal(const Natural& n);

inline Natural pow2(unsigned long k) {
    Natural r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

inline Natural mersenne(unsigned long n) { return pow2(n) - 1; }

inline Natural lcm(const Natural& a, const Natural& b) {
    Natural r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Natural gcd(const Natural& a, const Natural& b) {
    Natural r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Natural& d, const Natural& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

inline bool fits_u64(const Natural& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Natural& n);
Natural from_u64(std::uint64_t v);

}  // namespace lcarev

#endif
