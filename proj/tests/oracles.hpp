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

#ifndef LCAREV_TESTS_ORACLES_HPP
#define LCAREV_TESTS_ORACLES_HPP

// Slow reference implementations used to check the library. They share no
// code with it: plain integers, std::vector<int> matrices, exhaustive scans.

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline int degree(u64 f) { return f ? 63 - std::countl_zero(f) : -1; }

// Carry-less product; the caller keeps deg a + deg b < 64.
inline u64 clmul(u64 a, u64 b) {
    u64 r = 0;
    for (int i = 0; i < 64; ++i)
        if ((a >> i) & 1u) r ^= b << i;
    return r;
}

inline u64 polymod(u64 a, u64 m) {
    const int dm = degree(m);
    for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
    return a;
}

inline u64 polydiv(u64 a, u64 m) {
    u64 q = 0;
    const int dm = degree(m);
    for (int d = degree(a); d >= dm; d = degree(a)) {
        q |= u64{1} << (d - dm);
        a ^= m << (d - dm);
    }
    return q;
}

// Irreducible iff no polynomial of degree 1..deg/2 divides it.
inline bool irreducible(u64 f) {
    const int n = degree(f);
    if (n < 1) return false;
    for (u64 g = 2; degree(g) <= n / 2; ++g)
        if (polymod(f, g) == 0) return false;
    return true;
}

// Least k >= 1 with x^k == 1 mod f, f(0) = 1, deg f >= 1.
inline u64 order_of_x(u64 f) {
    const int n = degree(f);
    if (n == 0) return 1;
    u64 acc = 1;
    for (u64 k = 1;; ++k) {
        acc <<= 1;
        if ((acc >> n) & 1u) acc ^= f;
        if (acc == 1) return k;
    }
}

// Complete factorization into irreducibles by repeated trial division.
inline std::vector<std::pair<u64, unsigned>> factor_poly(u64 f) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 g = 2; degree(f) >= 1 && degree(g) <= degree(f); ++g) {
        if (!irreducible(g)) continue;
        unsigned e = 0;
        while (degree(f) >= degree(g) && polymod(f, g) == 0) {
            f = polydiv(f, g);
            ++e;
        }
        if (e) out.emplace_back(g, e);
    }
    return out;
}

inline std::vector<std::pair<u64, unsigned>> factor_int(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// Number of monic irreducibles of degree n over GF(2), via the Moebius sum.
inline u64 gauss_count(unsigned n) {
    auto mobius = [](unsigned d) {
        int mu = 1;
        for (unsigned p = 2; p * p <= d; ++p) {
            if (d % p) continue;
            d /= p;
            if (d % p == 0) return 0;
            mu = -mu;
        }
        return d > 1 ? -mu : mu;
    };
    long long s = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) s += mobius(d) * (1LL << (n / d));
    return static_cast<u64>(s / n);
}

using IntMatrix = std::vector<std::vector<int>>;

// n x n matrix of the rule: row i has coefficient text[k] at column i - left + k.
inline IntMatrix rule_matrix(const std::string& text, std::size_t left, std::size_t n) {
    IntMatrix m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < text.size(); ++k) {
            const long col = static_cast<long>(i) - static_cast<long>(left) + static_cast<long>(k);
            if (col >= 0 && col < static_cast<long>(n)) m[i][static_cast<std::size_t>(col)] = text[k] - '0';
        }
    return m;
}

inline int det_mod2(IntMatrix m) {
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] % 2 == 0) ++p;
        if (p == n) return 0;
        std::swap(m[p], m[c]);
        for (std::size_t r = c + 1; r < n; ++r)
            if (m[r][c] % 2)
                for (std::size_t k = c; k < n; ++k) m[r][k] = (m[r][k] + m[c][k]) % 2;
    }
    return 1;
}

inline int rule_det(const std::string& text, std::size_t left, std::size_t n) {
    return det_mod2(rule_matrix(text, left, n));
}

// Evolution by the defining sum, leftmost cell first, null outside.
inline std::string step(const std::string& text, std::size_t left, const std::string& c) {
    const long n = static_cast<long>(c.size());
    std::string out(c.size(), '0');
    for (long i = 0; i < n; ++i) {
        int s = 0;
        for (std::size_t k = 0; k < text.size(); ++k) {
            const long j = i - static_cast<long>(left) + static_cast<long>(k);
            if (j >= 0 && j < n) s ^= (text[k] - '0') & (c[static_cast<std::size_t>(j)] - '0');
        }
        out[static_cast<std::size_t>(i)] = static_cast<char>('0' + s);
    }
    return out;
}

// Every coefficient string of length m with 1 at both ends.
inline std::vector<std::string> bordered_strings(std::size_t m) {
    std::vector<std::string> out;
    if (m == 1) return {"1"};
    for (u64 mid = 0; mid < (u64{1} << (m - 2)); ++mid) {
        std::string s(m, '0');
        s.front() = s.back() = '1';
        for (std::size_t k = 0; k + 2 < m; ++k)
            if ((mid >> k) & 1u) s[k + 1] = '1';
        out.push_back(s);
    }
    return out;
}

}  // namespace oracle

#endif
