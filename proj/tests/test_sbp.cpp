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

#include <map>
#include <random>
#include <sstream>

#include "lcarev/analysis.hpp"
#include "lcarev/error.hpp"
#include "lcarev/oracle.hpp"
#include "lcarev/sbp.hpp"
#include "oracles.hpp"

using namespace lcarev;

TEST_CASE("initial subset") {
    const SubsetNode s = initial_subset(3, 3);
    REQUIRE(s.rows.size() == 3);
    CHECK(s.row_string(0) == "000|001");
    CHECK(s.row_string(1) == "000|010");
    CHECK(s.row_string(2) == "000|100");
    CHECK(initial_subset(1, 1).row_string(0) == "0|1");
    const SubsetNode t = initial_subset(2, 2);
    CHECK(t.row_string(0) == "00|01");
    CHECK(t.row_string(1) == "00|10");
    CHECK(subset_rank(s) == 3);
    CHECK_THROWS_AS(initial_subset(0, 1), Error);
}

TEST_CASE("step and rank") {
    SubsetNode s = step_subset(initial_subset(2, 2), parse_rule("11001", 2));
    CHECK(s.row_string(0) == "00|10");
    CHECK(s.step_index == 1);
    CHECK(step_subset(initial_subset(1, 1), parse_rule("111", 1)).row_string(0) == "1|1");
    const SubsetNode z = step_subset(initial_subset(1, 1), parse_rule("101", 1));
    CHECK(z.row_string(0) == "1|0");
    CHECK(subset_rank(z) == 0);
    SubsetNode dup = initial_subset(1, 2);
    dup.rows[1] = dup.rows[0];
    CHECK(subset_rank(dup) == 1);
    CHECK_THROWS_AS(step_subset(initial_subset(1, 1), parse_rule("110", 1)), Error);
}

TEST_CASE("SBP residues") {
    auto rep = reversible_residues_sbp(parse_rule("11111", 2));
    CHECK(rep.period == 5);
    CHECK(rep.residues == std::vector<std::uint64_t>{0, 1});
    rep = reversible_residues_sbp(parse_rule("111", 1));
    CHECK(rep.period == 3);
    CHECK(rep.residues == std::vector<std::uint64_t>{0, 1});
    rep = reversible_residues_sbp(parse_rule("101", 1));
    CHECK(rep.period == 2);
    CHECK(rep.residues == std::vector<std::uint64_t>{0});
}

TEST_CASE("SBP rows are the DFA tuples at indices 2^j, and ranks match node reversibility") {
    for (std::size_t m = 3; m <= 9; ++m)
        for (const auto& s : oracle::bordered_strings(m))
            for (std::size_t left = 1; left + 1 < m; ++left) {
                const Rule r = parse_rule(s, left);
                if (r.right() > 8) continue;
                Node node = initial_node(r.left(), r.right());
                SubsetNode sub = initial_subset(r.left(), r.right());
                const std::uint64_t p = dfa_period(r);
                for (std::uint64_t k = 0; k < p; ++k) {
                    for (std::size_t j = 0; j < r.right(); ++j)
                        CHECK(sub.rows[j].to_string() == node.tuple_string(std::size_t{1} << j));
                    if (m <= 7) CHECK((subset_rank(sub) == r.right()) == node_reversible(node));
                    node = next_node(node, r);
                    advance_subset(sub, r);
                }
                CHECK(sub.same_rows(initial_subset(r.left(), r.right())));
            }
}

TEST_CASE("SBP matches determinants for every bilateral rule up to size 9") {
    std::map<std::string, std::vector<std::vector<std::uint64_t>>> by_string;
    for (std::size_t m = 3; m <= 9; ++m)
        for (const auto& s : oracle::bordered_strings(m))
            for (std::size_t left = 1; left + 1 < m; ++left) {
                const Rule r = parse_rule(s, left);
                const auto rep = reversible_residues_sbp(r);
                CHECK(!rep.residues.empty());
                CHECK(rep.residues.front() == 0);
                const std::uint64_t p = std::min<std::uint64_t>(to_u64(rep.period), 511);
                for (std::uint64_t n = 1; n <= 3 * p; ++n) CHECK(rep.reversible_at(n) == det_banded(r, n));
                by_string[s].push_back(rep.residues);
            }
    // Record whether any coefficient string has split-dependent residues.
    std::size_t dependent = 0;
    for (const auto& [s, sets] : by_string)
        for (const auto& v : sets)
            if (v != sets.front()) {
                ++dependent;
                break;
            }
    MESSAGE("coefficient strings with split-dependent residues: " << dependent << " of " << by_string.size());
}

TEST_CASE("point queries walk or jump and agree with the determinant") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = 3 + rng() % 10;
        std::string s(m, '0');
        s.front() = s.back() = '1';
        for (std::size_t k = 1; k + 1 < m; ++k) s[k] = (rng() & 1u) ? '1' : '0';
        const Rule r = parse_rule(s, 1 + rng() % (m - 2));
        const std::size_t n = 1 + rng() % 300;
        SbpOptions walk, jump;
        jump.step_budget = 0;
        const bool det = det_banded(r, n);
        CHECK(sbp_reversible_at(r, n, walk) == det);
        CHECK(sbp_reversible_at(r, n, jump) == det);
    }
    // Jump agrees with walking on a long period.
    const Rule big = parse_rule("1000000000010000001");
    SubsetNode walked = initial_subset(big.left(), big.right());
    for (int k = 0; k < 5000; ++k) advance_subset(walked, big);
    CHECK(jump_subset(initial_subset(big.left(), big.right()), big, 5000).same_rows(walked));
}

TEST_CASE("step budget and trace") {
    SbpOptions o;
    o.step_budget = 10;
    CHECK_THROWS_AS(reversible_residues_sbp(parse_rule("10011", 2), o), Error);
    std::ostringstream trace;
    SbpOptions t;
    t.on_step = [&](const SubsetNode& s, std::size_t rank) { trace << s.step_index << ':' << rank << ' '; };
    (void)reversible_residues_sbp(parse_rule("11111", 2), t);
    CHECK(trace.str() == "0:2 1:2 2:1 3:0 4:1 ");
}

TEST_CASE("analysis facade") {
    const auto uni = decide_residues(parse_rule("0110", 2));
    CHECK(uni.unilateral);
    CHECK(uni.residues == std::vector<std::uint64_t>{0});
    const auto dead = decide_residues(parse_rule("011", 0));
    CHECK(dead.unilateral);
    CHECK(dead.residues.empty());
    const auto bil = decide_residues(parse_rule("0111110", 3), ResidueMethod::Dfa);
    CHECK(bil.rule == parse_rule("11111", 2));
    CHECK(bil.residues == std::vector<std::uint64_t>{0, 1});
    CHECK(decide_reversible(parse_rule("11111", 2), 10));
    CHECK_FALSE(decide_reversible(parse_rule("11111", 2), 7));
    CHECK(decide_reversible(parse_rule("111", 1), 4));
    CHECK(decide_reversible(parse_rule("1101", 0), 1000));
    CHECK_THROWS_AS(decide_reversible(parse_rule("111", 1), 0), Error);
}
