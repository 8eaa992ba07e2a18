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

// Exercises the shared library through its C interface only.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "lcarev/lcarev.h"

namespace {

struct Ctx {
    lcarev_context* ctx = nullptr;
    Ctx() { REQUIRE(lcarev_context_new(&ctx) == LCAREV_OK); }
    ~Ctx() { lcarev_context_free(ctx); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    lcarev_string_free(s);
    return out;
}

lcarev_rule* rule(lcarev_context* ctx, const char* bits, int64_t left = LCAREV_DEFAULT_LEFT) {
    lcarev_rule* r = nullptr;
    REQUIRE(lcarev_rule_parse(ctx, bits, left, &r) == LCAREV_OK);
    return r;
}

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(lcarev_version()) == "0.1.0");
    CHECK(std::string(lcarev_status_name(LCAREV_OK)) == "Ok");
    CHECK(std::string(lcarev_status_name(LCAREV_E_ZERO_RULE)) == "ZeroRule");
    CHECK(std::string(lcarev_status_name(LCAREV_E_INTERNAL)) == "Internal");
}

TEST_CASE("rule handles") {
    Ctx c;
    lcarev_rule* r = rule(c.ctx, "0110010", 3);
    CHECK(lcarev_rule_size(r) == 7);
    CHECK(lcarev_rule_left(r) == 3);
    CHECK(lcarev_rule_right(r) == 3);
    lcarev_rule* n = nullptr;
    size_t shift = 99;
    REQUIRE(lcarev_rule_normalize(c.ctx, r, &n, &shift) == LCAREV_OK);
    char* bits = nullptr;
    REQUIRE(lcarev_rule_bits(n, &bits) == LCAREV_OK);
    CHECK(take(bits) == "11001");
    CHECK(lcarev_rule_left(n) == 2);
    lcarev_poly* p = nullptr;
    REQUIRE(lcarev_rule_to_poly(c.ctx, n, &p) == LCAREV_OK);
    char* sparse = nullptr;
    REQUIRE(lcarev_poly_sparse(p, &sparse) == LCAREV_OK);
    CHECK(take(sparse) == "x^4+x^3+1");
    char* per = nullptr;
    REQUIRE(lcarev_rule_period(c.ctx, r, &per) == LCAREV_OK);
    CHECK(take(per) == "15");
    char* sim = nullptr;
    REQUIRE(lcarev_simulate(c.ctx, rule(c.ctx, "111", 1), "010", 1, &sim) == LCAREV_OK);
    CHECK(take(sim).find("\"111\"") != std::string::npos);
    lcarev_poly_free(p);
    lcarev_rule_free(n);
    lcarev_rule_free(r);
}

TEST_CASE("errors carry a status and a message") {
    Ctx c;
    lcarev_rule* r = nullptr;
    CHECK(lcarev_rule_parse(c.ctx, "0000", LCAREV_DEFAULT_LEFT, &r) == LCAREV_OK);
    char* per = nullptr;
    CHECK(lcarev_rule_period(c.ctx, r, &per) == LCAREV_E_ZERO_RULE);
    CHECK(per == nullptr);
    CHECK(std::string(lcarev_last_error(c.ctx)).find("ZeroRule") != std::string::npos);
    lcarev_rule_free(r);
    lcarev_rule* bad = nullptr;
    CHECK(lcarev_rule_parse(c.ctx, "1x1", LCAREV_DEFAULT_LEFT, &bad) == LCAREV_E_PARSE);
    CHECK(bad == nullptr);
    CHECK(lcarev_rule_parse(c.ctx, "111", 5, &bad) == LCAREV_E_SPLIT);
    CHECK(lcarev_rule_parse(c.ctx, nullptr, 1, &bad) == LCAREV_E_INVALID_ARGUMENT);
    CHECK(lcarev_rule_parse(nullptr, "111", 1, &bad) == LCAREV_E_INVALID_ARGUMENT);
    lcarev_poly* p = nullptr;
    REQUIRE(lcarev_poly_parse(c.ctx, "x^2+1", &p) == LCAREV_OK);
    int irr = -1;
    REQUIRE(lcarev_poly_is_irreducible(c.ctx, p, &irr) == LCAREV_OK);
    CHECK(irr == 0);
    lcarev_poly_free(p);
    REQUIRE(lcarev_poly_parse(c.ctx, "x^3+x", &p) == LCAREV_OK);
    CHECK(lcarev_poly_period(c.ctx, p, &per) == LCAREV_E_NO_CONSTANT_TERM);
    lcarev_poly_free(p);
    char* out = nullptr;
    CHECK(lcarev_generate_json(c.ctx, "0", nullptr, &out) == LCAREV_E_INVALID_INPUT);
    CHECK(lcarev_check(c.ctx, nullptr, "3", &irr) == LCAREV_E_INVALID_ARGUMENT);
}

TEST_CASE("residues, reports and point checks") {
    Ctx c;
    lcarev_rule* r = rule(c.ctx, "11111", 2);
    for (lcarev_method m : {LCAREV_METHOD_SBP, LCAREV_METHOD_DFA}) {
        lcarev_report* rep = nullptr;
        REQUIRE(lcarev_residues(c.ctx, r, m, &rep) == LCAREV_OK);
        char* p = nullptr;
        REQUIRE(lcarev_report_period(rep, &p) == LCAREV_OK);
        CHECK(take(p) == "5");
        REQUIRE(lcarev_report_residue_count(rep) == 2);
        CHECK(lcarev_report_residue(rep, 0) == 0);
        CHECK(lcarev_report_residue(rep, 1) == 1);
        char* j = nullptr;
        REQUIRE(lcarev_report_json(rep, &j) == LCAREV_OK);
        CHECK(take(j).find("\"residues\"") != std::string::npos);
        lcarev_report_free(rep);
    }
    int rev = -1;
    REQUIRE(lcarev_check(c.ctx, r, "10", &rev) == LCAREV_OK);
    CHECK(rev == 1);
    REQUIRE(lcarev_check(c.ctx, r, "7", &rev) == LCAREV_OK);
    CHECK(rev == 0);
    REQUIRE(lcarev_check(c.ctx, r, "100000000000000000000000000001", &rev) == LCAREV_OK);
    CHECK(rev == 1);
    CHECK(lcarev_check(c.ctx, r, "0", &rev) == LCAREV_E_INVALID_INPUT);

    const auto trace = std::filesystem::temp_directory_path() / "lcarev_capi_trace.jsonl";
    lcarev_report* rep = nullptr;
    REQUIRE(lcarev_residues_trace(c.ctx, r, trace.c_str(), &rep) == LCAREV_OK);
    lcarev_report_free(rep);
    std::ifstream in(trace);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 5);
    std::filesystem::remove(trace);

    REQUIRE(lcarev_context_set_step_budget(c.ctx, 3) == LCAREV_OK);
    lcarev_rule* long_rule = rule(c.ctx, "10011", 2);
    CHECK(lcarev_residues(c.ctx, long_rule, LCAREV_METHOD_SBP, &rep) == LCAREV_E_STEP_BUDGET);
    lcarev_rule_free(long_rule);
    lcarev_rule_free(r);
}

TEST_CASE("generation, factoring and bounds") {
    Ctx c;
    lcarev_gen_options o;
    lcarev_gen_options_init(&o);
    CHECK(o.g_mode == LCAREV_G_EXACT);
    o.g_mode = LCAREV_G_PAPER;
    char* out = nullptr;
    REQUIRE(lcarev_generate_json(c.ctx, "84", &o, &out) == LCAREV_OK);
    CHECK(take(out).find("\"count\": 64") != std::string::npos);
    REQUIRE(lcarev_count_lower_bound(c.ctx, "360", &out) == LCAREV_OK);
    CHECK(take(out) == "448");
    REQUIRE(lcarev_factor_json(c.ctx, "255", &out) == LCAREV_OK);
    CHECK(take(out).find("\"17\"") != std::string::npos);
    REQUIRE(lcarev_table_build(c.ctx, 6) == LCAREV_OK);
    REQUIRE(lcarev_table_json(c.ctx, &out) == LCAREV_OK);
    CHECK(take(out).find("\"111\"") != std::string::npos);
}

TEST_CASE("cache persistence") {
    Ctx c;
    const auto dir = std::filesystem::temp_directory_path();
    const auto fc = (dir / "lcarev_capi_factors.json").string();
    const auto pt = (dir / "lcarev_capi_table.json").string();
    REQUIRE(lcarev_table_build(c.ctx, 5) == LCAREV_OK);
    REQUIRE(lcarev_context_save_factor_cache(c.ctx, fc.c_str()) == LCAREV_OK);
    REQUIRE(lcarev_context_save_period_table(c.ctx, pt.c_str()) == LCAREV_OK);
    Ctx d;
    CHECK(lcarev_context_load_factor_cache(d.ctx, fc.c_str()) == LCAREV_OK);
    CHECK(lcarev_context_load_period_table(d.ctx, pt.c_str()) == LCAREV_OK);
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(lcarev_table_json(c.ctx, &a) == LCAREV_OK);
    REQUIRE(lcarev_table_json(d.ctx, &b) == LCAREV_OK);
    CHECK(take(a) == take(b));
    { std::ofstream(pt) << "not json"; }
    CHECK(lcarev_context_load_period_table(d.ctx, pt.c_str()) != LCAREV_OK);
    std::filesystem::remove(fc);
    std::filesystem::remove(pt);
}

TEST_CASE("bench through the C interface") {
    Ctx c;
    char* json = nullptr;
    char* table = nullptr;
    REQUIRE(lcarev_bench_json(c.ctx, R"([{"rule":"11111","left":2,"methods":["pp","sbp"]}])", 5.0, 1, &json, &table) ==
            LCAREV_OK);
    CHECK(take(json).find("\"SBP\"") != std::string::npos);
    CHECK(take(table).find("11111") != std::string::npos);
    CHECK(lcarev_bench_json(c.ctx, "nope", 5.0, 1, &json, nullptr) == LCAREV_E_PARSE);
}
