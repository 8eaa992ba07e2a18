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

#include "lcarev/gf2poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <map>

#include "lcarev/bitvec.hpp"
#include "lcarev/error.hpp"

namespace lcarev {

namespace {

using word = Poly::word_type;

void check_degree_cap(std::size_t deg) {
    if (deg > kMaxPolyDegree)
        fail(ErrorCode::CapExceeded, "polynomial degree " + std::to_string(deg) + " exceeds cap " +
                                         std::to_string(kMaxPolyDegree));
}

// 64x64 -> 128 carry-less product, four bits of `a` at a time.
std::array<word, 2> clmul(word a, word b) {
    std::array<std::array<word, 2>, 16> table{};
    for (unsigned i = 1; i < 16; ++i) {
        table[i] = {0, 0};
        for (unsigned k = 0; k < 4; ++k) {
            if ((i >> k) & 1u) {
                table[i][0] ^= b << k;
                table[i][1] ^= k ? (b >> (64 - k)) : 0;
            }
        }
    }
    word lo = 0, hi = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        const auto& t = table[(a >> shift) & 0xf];
        if (shift) {
            lo ^= t[0] << shift;
            hi ^= (t[0] >> (64 - shift)) ^ (t[1] << shift);
        } else {
            lo ^= t[0];
            hi ^= t[1];
        }
    }
    return {lo, hi};
}

// Interleaves zeros: bit i of v moves to bit 2i of the 128-bit result.
std::array<word, 2> spread(word v) {
    auto part = [](word x) {
        x &= 0xffffffffULL;
        x = (x | (x << 16)) & 0x0000ffff0000ffffULL;
        x = (x | (x << 8)) & 0x00ff00ff00ff00ffULL;
        x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0fULL;
        x = (x | (x << 2)) & 0x3333333333333333ULL;
        x = (x | (x << 1)) & 0x5555555555555555ULL;
        return x;
    };
    return {part(v), part(v >> 32)};
}

// dst ^= src << shift, dst already large enough.
void xor_shifted(std::vector<word>& dst, std::span<const word> src, std::size_t shift) {
    const std::size_t ws = shift / 64, bs = shift % 64;
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
        return;
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + ws] ^= src[i] << bs;
        if (i + ws + 1 < dst.size()) dst[i + ws + 1] ^= src[i] >> (64 - bs);
    }
}

std::size_t top_bit(const std::vector<word>& w) { return (w.size() - 1) * 64 + 63 - std::countl_zero(w.back()); }

void trim_words(std::vector<word>& w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
}

// In-place reduction of r modulo m (m nonzero). Returns quotient bits if asked.
void reduce(std::vector<word>& r, const Poly& m, std::vector<word>* quotient) {
    trim_words(r);
    const std::size_t dm = m.deg();
    if (r.empty() || top_bit(r) < dm) return;
    if (quotient) quotient->assign((top_bit(r) - dm) / 64 + 1, 0);
    const auto mw = m.words();
    for (std::size_t i = top_bit(r) + 1; i-- > dm;) {
        if ((r[i / 64] >> (i % 64)) & 1u) {
            xor_shifted(r, mw, i - dm);
            if (quotient) (*quotient)[(i - dm) / 64] |= word{1} << ((i - dm) % 64);
        }
    }
    trim_words(r);
}

std::vector<std::size_t> distinct_prime_factors(std::size_t n) {
    std::vector<std::size_t> ps;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

// ---------------------------------------------------------------- Poly

void Poly::trim() { trim_words(words_); }

Poly Poly::monomial(std::size_t k) {
    check_degree_cap(k);
    std::vector<word> w(k / 64 + 1, 0);
    w[k / 64] = word{1} << (k % 64);
    return Poly(std::move(w));
}

Poly Poly::from_exponents(std::initializer_list<std::size_t> exps) {
    Poly p;
    for (auto e : exps) p.set_coeff(e, !p.coeff(e));
    return p;
}

Poly Poly::from_u64(std::uint64_t bits) { return Poly(std::vector<word>{bits}); }

Poly Poly::from_words(std::vector<word> words) { return Poly(std::move(words)); }

std::optional<std::size_t> Poly::degree() const noexcept {
    if (words_.empty()) return std::nullopt;
    return top_bit(words_);
}

std::size_t Poly::deg() const {
    if (words_.empty()) fail(ErrorCode::Undefined, "degree of the zero polynomial");
    return top_bit(words_);
}

void Poly::set_coeff(std::size_t k, bool v) {
    if (v) {
        check_degree_cap(k);
        if (words_.size() <= k / 64) words_.resize(k / 64 + 1, 0);
        words_[k / 64] |= word{1} << (k % 64);
    } else if (k / 64 < words_.size()) {
        words_[k / 64] &= ~(word{1} << (k % 64));
        trim();
    }
}

std::size_t Poly::weight() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::uint64_t Poly::to_u64() const {
    if (words_.size() > 1) fail(ErrorCode::CapExceeded, "polynomial does not fit in 64 bits");
    return words_.empty() ? 0 : words_[0];
}

std::string Poly::to_bits() const {
    if (is_zero()) return "0";
    const std::size_t d = deg();
    std::string s(d + 1, '0');
    for (std::size_t k = 0; k <= d; ++k)
        if (coeff(k)) s[d - k] = '1';
    return s;
}

std::string Poly::to_sparse() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = deg() + 1; k-- > 0;) {
        if (!coeff(k)) continue;
        if (!s.empty()) s += '+';
        if (k == 0)
            s += '1';
        else if (k == 1)
            s += 'x';
        else
            s += "x^" + std::to_string(k);
    }
    return s;
}

Poly Poly::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) fail(ErrorCode::ParseError, "empty polynomial");

    if (t.find_first_not_of("01") == std::string::npos) {
        Poly p;
        const std::size_t n = t.size();
        for (std::size_t i = 0; i < n; ++i)
            if (t[i] == '1') p.set_coeff(n - 1 - i, true);
        return p;
    }

    Poly p;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        const std::size_t end = std::min(t.find('+', pos), t.size());
        const std::string term = t.substr(pos, end - pos);
        std::size_t exp = 0;
        if (term == "1") {
            exp = 0;
        } else if (term == "x" || term == "X") {
            exp = 1;
        } else if (term.size() > 2 && (term[0] == 'x' || term[0] == 'X') && term[1] == '^' &&
                   term.find_first_not_of("0123456789", 2) == std::string::npos) {
            const std::string digits = term.substr(2);
            if (digits.size() > 9) fail(ErrorCode::CapExceeded, "exponent " + digits + " exceeds the degree cap");
            exp = std::stoull(digits);
        } else if (term == "0") {
            pos = end + 1;
            continue;
        } else {
            fail(ErrorCode::ParseError, "cannot parse polynomial term '" + term + "' in '" + std::string(text) + "'");
        }
        p.set_coeff(exp, !p.coeff(exp));
        pos = end + 1;
    }
    return p;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
    for (std::size_t i = a.words_.size(); i-- > 0;)
        if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    return std::strong_ordering::equal;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    check_degree_cap(a.deg() + b.deg());
    std::vector<word> out(a.words_.size() + b.words_.size(), 0);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        if (!a.words_[i]) continue;
        for (std::size_t j = 0; j < b.words_.size(); ++j) {
            const auto [lo, hi] = clmul(a.words_[i], b.words_[j]);
            out[i + j] ^= lo;
            out[i + j + 1] ^= hi;
        }
    }
    return Poly(std::move(out));
}

// ---------------------------------------------------------------- arithmetic

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }

Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

Poly poly_square(const Poly& a) {
    if (a.is_zero()) return {};
    check_degree_cap(2 * a.deg());
    const auto w = a.words();
    std::vector<word> out(2 * w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto [lo, hi] = spread(w[i]);
        out[2 * i] = lo;
        out[2 * i + 1] = hi;
    }
    return Poly::from_words(std::move(out));
}

DivRem poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorCode::DivByZero, "division by the zero polynomial");
    std::vector<word> r(a.words().begin(), a.words().end());
    std::vector<word> q;
    reduce(r, b, &q);
    return {Poly::from_words(std::move(q)), Poly::from_words(std::move(r))};
}

Poly poly_mod(const Poly& a, const Poly& modulus) {
    if (modulus.is_zero()) fail(ErrorCode::DivByZero, "reduction modulo the zero polynomial");
    std::vector<word> r(a.words().begin(), a.words().end());
    reduce(r, modulus, nullptr);
    return Poly::from_words(std::move(r));
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus) {
    return poly_mod(&a == &b ? poly_square(a) : a * b, modulus);
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) fail(ErrorCode::Undefined, "gcd(0, 0)");
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = poly_mod(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return u;  // monic automatically over GF(2)
}

Poly poly_powmod(const Poly& base, const Natural& exp, const Poly& modulus) {
    if (modulus.is_zero() || modulus.deg() == 0)
        fail(ErrorCode::InvalidModulus, "modulus must have degree >= 1");
    if (sgn(exp) < 0) fail(ErrorCode::InvalidInput, "negative exponent");
    Poly b = poly_mod(base, modulus);
    Poly result = Poly::one();
    const std::size_t nbits = sgn(exp) == 0 ? 0 : mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = nbits; i-- > 0;) {
        result = poly_mod(poly_square(result), modulus);
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = poly_mod(result * b, modulus);
    }
    return result;
}

Poly poly_pow(const Poly& base, unsigned exp) {
    Poly result = Poly::one();
    Poly b = base;
    while (exp) {
        if (exp & 1u) result = result * b;
        exp >>= 1;
        if (exp) b = poly_square(b);
    }
    return result;
}

Poly poly_derivative(const Poly& f) {
    Poly d;
    if (f.is_zero()) return d;
    for (std::size_t k = 1; k <= f.deg(); k += 2)
        if (f.coeff(k)) d.set_coeff(k - 1, true);
    return d;
}

Poly poly_sqrt(const Poly& f) {
    Poly r;
    if (f.is_zero()) return r;
    for (std::size_t k = 0; k <= f.deg(); ++k) {
        if (!f.coeff(k)) continue;
        if (k % 2) fail(ErrorCode::InvalidInput, "polynomial is not a square: " + f.to_bits());
        r.set_coeff(k / 2, true);
    }
    return r;
}

Poly poly_reciprocal(const Poly& f) {
    Poly r;
    if (f.is_zero()) return r;
    const std::size_t d = f.deg();
    for (std::size_t k = 0; k <= d; ++k)
        if (f.coeff(k)) r.set_coeff(d - k, true);
    return r;
}

Poly poly_compose_power(const Poly& f, std::size_t m) {
    Poly r;
    if (f.is_zero()) return r;
    if (m == 0) fail(ErrorCode::InvalidInput, "substitution x -> x^0");
    check_degree_cap(f.deg() * m);
    for (std::size_t k = 0; k <= f.deg(); ++k)
        if (f.coeff(k)) r.set_coeff(k * m, true);
    return r;
}

Poly expand(std::span<const FactorPower> factors) {
    Poly p = Poly::one();
    for (const auto& fp : factors) p = p * poly_pow(fp.factor, fp.multiplicity);
    return p;
}

// ---------------------------------------------------------------- factoring

std::vector<FactorPower> squarefree_decompose(const Poly& f) {
    if (f.is_zero()) fail(ErrorCode::Undefined, "squarefree decomposition of zero");
    std::map<unsigned, Poly> parts;
    auto add_part = [&](const Poly& p, unsigned mult) {
        if (p.is_one()) return;
        auto [it, inserted] = parts.emplace(mult, p);
        if (!inserted) it->second = it->second * p;
    };

    // Yun-style loop; in characteristic 2 whatever survives in c is a square.
    std::vector<std::pair<Poly, unsigned>> pending{{f, 1}};
    while (!pending.empty()) {
        auto [g, scale] = pending.back();
        pending.pop_back();
        if (g.deg() == 0) continue;
        const Poly dg = poly_derivative(g);
        if (dg.is_zero()) {
            pending.emplace_back(poly_sqrt(g), scale * 2);
            continue;
        }
        Poly c = poly_gcd(g, dg);
        Poly w = poly_divrem(g, c).quotient;
        unsigned i = 1;
        while (!w.is_one()) {
            Poly y = poly_gcd(w, c);
            Poly z = poly_divrem(w, y).quotient;
            add_part(z, i * scale);
            ++i;
            w = std::move(y);
            c = poly_divrem(c, w).quotient;
        }
        if (!c.is_one()) pending.emplace_back(poly_sqrt(c), scale * 2);
    }

    std::vector<FactorPower> out;
    for (auto& [mult, p] : parts) out.push_back({std::move(p), mult});
    return out;
}

namespace {

// Basis of { v : A v = 0 } for an n x n matrix given as rows.
std::vector<BitVec> null_space(std::vector<BitVec> rows, std::size_t n) {
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && !rows[piv].get(col)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        BitVec v(n);
        v.set(free);
        for (std::size_t r = 0; r < rank; ++r)
            if (rows[r].get(free)) v.set(pivot_col[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Splits a squarefree polynomial of degree >= 1 into irreducibles.
std::vector<Poly> berlekamp_squarefree(const Poly& f) {
    const std::size_t n = f.deg();
    if (n == 1) return {f};

    // Row i of Q is x^(2i) mod f; we need v with v (Q - I) = 0, i.e. the
    // null space of the transpose.
    std::vector<BitVec> qt(n, BitVec(n));
    const Poly x2 = poly_mod(Poly::monomial(2), f);
    Poly row = Poly::one();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (row.coeff(j)) qt[j].set(i);
        qt[i].flip(i);
        row = poly_mulmod(row, x2, f);
    }
    const auto basis = null_space(std::move(qt), n);
    const std::size_t k = basis.size();
    if (k == 1) return {f};

    std::vector<Poly> factors{f};
    for (const auto& v : basis) {
        if (factors.size() == k) break;
        Poly g;
        for (std::size_t i = 0; i < n; ++i)
            if (v.get(i)) g.set_coeff(i, true);
        if (g.is_zero() || g.deg() == 0) continue;
        std::vector<Poly> next;
        for (const auto& u : factors) {
            if (u.deg() <= 1) {
                next.push_back(u);
                continue;
            }
            Poly d = poly_gcd(u, g);
            if (d.deg() == 0 || d == u) {
                next.push_back(u);
            } else {
                next.push_back(poly_divrem(u, d).quotient);
                next.push_back(std::move(d));
            }
        }
        factors = std::move(next);
    }
    if (factors.size() != k)
        fail(ErrorCode::Undefined, "Berlekamp split produced " + std::to_string(factors.size()) + " factors, expected " +
                                       std::to_string(k));
    return factors;
}

}  // namespace

Factorization berlekamp_factor(const Poly& f) {
    if (f.is_zero() || f.deg() == 0) fail(ErrorCode::InvalidInput, "cannot factor a constant polynomial");
    Factorization out;
    for (const auto& part : squarefree_decompose(f))
        for (auto& p : berlekamp_squarefree(part.factor)) out.push_back({std::move(p), part.multiplicity});
    std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) { return a.factor < b.factor; });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.deg() == 0) fail(ErrorCode::InvalidInput, "irreducibility of a constant polynomial");
    const std::size_t n = f.deg();
    if (n == 1) return true;
    if (!f.constant_term()) return false;

    // frob[k] = x^(2^k) mod f
    const Poly xm = poly_mod(Poly::x(), f);
    std::vector<Poly> frob{xm};
    for (std::size_t k = 1; k <= n; ++k) frob.push_back(poly_mod(poly_square(frob.back()), f));
    if (frob[n] != xm) return false;
    for (auto l : distinct_prime_factors(n)) {
        const Poly h = frob[n / l] + xm;
        if (h.is_zero() || !poly_gcd(f, h).is_one()) return false;
    }
    return true;
}

}  // namespace lcarev
