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

#include <doctest.h>

#include <filesystem>

#include "lcarev/error.hpp"
#include "lcarev/period.hpp"
#include "oracles.hpp"

using namespace lcarev;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

}  // namespace

TEST_CASE("irreducible periods") {
    CHECK(irreducible_period(P("x^3+x+1")) == 7);
    CHECK(irreducible_period(P("x^8+x^5+x^4+x^3+1")) == 17);
    CHECK(irreducible_period(P("x^9+x+1")) == 73);
    CHECK(irreducible_period(P("x+1")) == 1);
    CHECK_THROWS_AS(irreducible_period(P("x^2+1")), Error);
    CHECK_THROWS_AS(irreducible_period(P("x^2+x")), Error);
    CHECK_THROWS_AS(irreducible_period(P("x")), Error);
    PeriodOptions small;
    small.degree_cap = 8;
    CHECK_THROWS_AS(irreducible_period(P("x^9+x+1"), small), Error);
    // Degree 64 through the bundled factorization of 2^64 - 1.
    CHECK(irreducible_period(P("x^64+x^4+x^3+x+1")) == mersenne(64));
}

TEST_CASE("reducible periods") {
    auto r = poly_period(P("x^4+x^3+x^2+x+1"));
    CHECK(r.period == 5);
    r = poly_period(P("x^3+x^2+x+1"));
    CHECK(r.period == 4);
    CHECK(r.lcm_part == 1);
    CHECK(r.power_part == 4);
    r = poly_period(P("x^4+x^2+1"));
    CHECK(r.period == 6);
    CHECK(r.lcm_part == 3);
    CHECK(r.power_part == 2);
    REQUIRE(r.factor_periods.size() == 1);
    CHECK(r.factor_periods[0].multiplicity == 2);
    CHECK(power_of_two_ceiling(1) == 1);
    CHECK(power_of_two_ceiling(3) == 4);
    CHECK(power_of_two_ceiling(8) == 8);
}

TEST_CASE("brute-force period") {
    CHECK(period_bruteforce(P("x^2+x+1")) == 3);
    CHECK(period_bruteforce(P("x+1")) == 1);
    CHECK(period_bruteforce(P("x^4+x^3+1")) == 15);
    CHECK_THROWS_AS(period_bruteforce(P("x^17+x^3+1")), Error);
}

TEST_CASE("reference table of irreducible periods") {
    const std::pair<const char*, int> rows[] = {{"11", 1},     {"111", 3},        {"1011", 7},
                                                {"11111", 5},  {"100101", 31},    {"100111001", 17},
                                                {"1000000011", 73}, {"11111111111", 11}};
    for (const auto& [bits, period] : rows) {
        CHECK(is_irreducible(P(bits)));
        CHECK(poly_period(P(bits)).period == period);
    }
}

TEST_CASE("period agrees with the shift-register scan, degree <= 12") {
    for (oracle::u64 f = 3; f < (oracle::u64{1} << 13); f += 2) {
        const Poly p = Poly::from_u64(f);
        const Natural got = poly_period(p).period;
        CHECK(got == from_u64(oracle::order_of_x(f)));
        CHECK(got == poly_period(poly_reciprocal(p)).period);
    }
}

TEST_CASE("irreducible periods divide 2^n - 1 and are odd") {
    for (oracle::u64 f = 3; f < (oracle::u64{1} << 13); f += 2) {
        const Poly p = Poly::from_u64(f);
        if (!is_irreducible(p)) continue;
        const Natural e = irreducible_period(p);
        CHECK(divides(e, mersenne(p.deg())));
        CHECK(mpz_odd_p(e.get_mpz_t()));
    }
}

TEST_CASE("coprime squarefree products take the lcm") {
    const Poly f = P("x^4+x+1"), g = P("x^3+x+1"), h = P("x^2+x+1");
    CHECK(poly_period(f * g).period == lcm(15, 7));
    CHECK(poly_period(g * h).period == 21);
    CHECK(poly_period(f * h).period == 15);
}

TEST_CASE("rule periods ignore the split and the zero borders") {
    CHECK(rule_period(parse_rule("11111", 2)).period == 5);
    CHECK(rule_period(parse_rule("10011", 2)).period == 15);
    CHECK(rule_period(parse_rule("11", 0)).period == 1);
    CHECK(rule_period(parse_rule("0100110", 3)).period == 15);
    for (std::size_t left = 0; left < 9; ++left)
        CHECK(rule_period(parse_rule("101100011", left)).period == rule_period(parse_rule("101100011", 4)).period);
    CHECK(rule_period(parse_rule("100000000000000000110000011")).period == 67108863);
}

TEST_CASE("period table build, save and load") {
    const PeriodTable t = PeriodTable::build(8);
    std::size_t expected = 0;
    for (unsigned n = 1; n <= 8; ++n) expected += oracle::gauss_count(n);
    CHECK(t.size() == expected - 1);  // x itself has no period
    CHECK(t.with_period(3) == std::vector<Poly>{P("x^2+x+1")});
    CHECK(t.with_period(17).size() == 2);
    const auto path = std::filesystem::temp_directory_path() / "lcarev_period_table_test.json";
    t.save(path);
    const PeriodTable back = PeriodTable::load(path);
    CHECK(back.size() == t.size());
    CHECK(back.to_json() == t.to_json());
    std::filesystem::remove(path);
    CHECK(PeriodTable::load(path).size() == 0);
    CHECK_THROWS_AS(PeriodTable::build(25), Error);
}
