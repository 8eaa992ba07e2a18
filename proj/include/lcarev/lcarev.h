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

#ifndef LCAREV_H
#define LCAREV_H

/*
 * C interface to lcarev: reversibility of one-dimensional linear cellular
 * automata over GF(2) with null boundaries.
 *
 * All objects are opaque handles. Every fallible call returns an
 * lcarev_status; on failure the message is available from
 * lcarev_last_error(ctx) until the next call on the same context.
 * Strings returned through char** are owned by the caller and released
 * with lcarev_string_free. A context may be shared by threads only if the
 * caller serializes calls on it.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LCAREV_API __declspec(dllexport)
#else
#define LCAREV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Grouped in blocks of ten; the CLI uses them as exit codes. */
typedef enum lcarev_status {
    LCAREV_OK = 0,
    LCAREV_E_INVALID_ARGUMENT = 1,
    LCAREV_E_PARSE = 10,
    LCAREV_E_SPLIT = 11,
    LCAREV_E_ZERO_RULE = 20,
    LCAREV_E_NO_CONSTANT_TERM = 21,
    LCAREV_E_NOT_NORMALIZED = 22,
    LCAREV_E_NOT_IRREDUCIBLE = 23,
    LCAREV_E_NOT_ODD = 24,
    LCAREV_E_INVALID_INPUT = 25,
    LCAREV_E_INVALID_MODULUS = 26,
    LCAREV_E_DIV_BY_ZERO = 27,
    LCAREV_E_UNDEFINED = 28,
    LCAREV_E_SHAPE = 29,
    LCAREV_E_SINGULAR = 30,
    LCAREV_E_CAP_EXCEEDED = 40,
    LCAREV_E_STEP_BUDGET = 41,
    LCAREV_E_FACTOR_TIMEOUT = 50,
    LCAREV_E_TIMEOUT = 51,
    LCAREV_E_CYCLE_MISMATCH = 60,
    LCAREV_E_IO = 70,
    LCAREV_E_INTERNAL = 90
} lcarev_status;

typedef enum lcarev_method {
    LCAREV_METHOD_SBP = 0,
    LCAREV_METHOD_DFA = 1
} lcarev_method;

typedef enum lcarev_g_mode {
    LCAREV_G_EXACT = 0,
    LCAREV_G_PAPER = 1
} lcarev_g_mode;

typedef enum lcarev_strategy {
    LCAREV_STRATEGY_CONSTRUCTION = 0,
    LCAREV_STRATEGY_COMPLETE = 1
} lcarev_strategy;

/* Pass as the split to use floor((size - 1) / 2). */
#define LCAREV_DEFAULT_LEFT (-1)

typedef struct lcarev_context lcarev_context;
typedef struct lcarev_rule lcarev_rule;
typedef struct lcarev_poly lcarev_poly;
typedef struct lcarev_report lcarev_report;

/* Generation options; initialize with lcarev_gen_options_init. */
typedef struct lcarev_gen_options {
    lcarev_g_mode g_mode;
    lcarev_strategy strategy;
    uint64_t limit;      /* 0: no limit */
    uint64_t max_degree; /* 0: none, products above degree 128 are an error */
    int all_splits;
} lcarev_gen_options;

/* ---- library ---- */
LCAREV_API const char* lcarev_version(void);
LCAREV_API const char* lcarev_status_name(lcarev_status status);
LCAREV_API void lcarev_string_free(char* s);

/* ---- context: caches, budgets, last error ---- */
LCAREV_API lcarev_status lcarev_context_new(lcarev_context** out);
LCAREV_API void lcarev_context_free(lcarev_context* ctx);
LCAREV_API const char* lcarev_last_error(const lcarev_context* ctx);
/* Wall-clock budget per call in seconds; <= 0 disables it. Default 30. */
LCAREV_API lcarev_status lcarev_context_set_budget(lcarev_context* ctx, double seconds);
/* Longest SBP walk before enumeration refuses or a point query jumps. */
LCAREV_API lcarev_status lcarev_context_set_step_budget(lcarev_context* ctx, uint64_t steps);
/* A missing file loads as empty. */
LCAREV_API lcarev_status lcarev_context_load_factor_cache(lcarev_context* ctx, const char* path);
LCAREV_API lcarev_status lcarev_context_save_factor_cache(lcarev_context* ctx, const char* path);
LCAREV_API lcarev_status lcarev_context_load_period_table(lcarev_context* ctx, const char* path);
LCAREV_API lcarev_status lcarev_context_save_period_table(lcarev_context* ctx, const char* path);

/* ---- rules ---- */
LCAREV_API lcarev_status lcarev_rule_parse(lcarev_context* ctx, const char* bits, int64_t left, lcarev_rule** out);
LCAREV_API void lcarev_rule_free(lcarev_rule* rule);
LCAREV_API size_t lcarev_rule_size(const lcarev_rule* rule);
LCAREV_API size_t lcarev_rule_left(const lcarev_rule* rule);
LCAREV_API size_t lcarev_rule_right(const lcarev_rule* rule);
LCAREV_API lcarev_status lcarev_rule_bits(const lcarev_rule* rule, char** out);
LCAREV_API lcarev_status lcarev_rule_normalize(lcarev_context* ctx, const lcarev_rule* rule, lcarev_rule** out,
                                               size_t* shift);
LCAREV_API lcarev_status lcarev_rule_to_poly(lcarev_context* ctx, const lcarev_rule* rule, lcarev_poly** out);
/* Successive configurations as a JSON list of strings, initial first. */
LCAREV_API lcarev_status lcarev_simulate(lcarev_context* ctx, const lcarev_rule* rule, const char* config,
                                         uint64_t steps, char** json_out);

/* ---- polynomials ---- */
/* MSB-first bits ("1011") or sparse form ("x^3+x+1"). */
LCAREV_API lcarev_status lcarev_poly_parse(lcarev_context* ctx, const char* text, lcarev_poly** out);
LCAREV_API void lcarev_poly_free(lcarev_poly* poly);
LCAREV_API lcarev_status lcarev_poly_bits(const lcarev_poly* poly, char** out);
LCAREV_API lcarev_status lcarev_poly_sparse(const lcarev_poly* poly, char** out);
LCAREV_API lcarev_status lcarev_poly_to_rule(lcarev_context* ctx, const lcarev_poly* poly, int64_t left,
                                             lcarev_rule** out);
LCAREV_API lcarev_status lcarev_poly_is_irreducible(lcarev_context* ctx, const lcarev_poly* poly, int* out);

/* ---- periods ---- */
/* Period as a decimal string. */
LCAREV_API lcarev_status lcarev_poly_period(lcarev_context* ctx, const lcarev_poly* poly, char** decimal_out);
LCAREV_API lcarev_status lcarev_rule_period(lcarev_context* ctx, const lcarev_rule* rule, char** decimal_out);
/* Period with factorization and per-factor periods, as JSON. */
LCAREV_API lcarev_status lcarev_poly_period_json(lcarev_context* ctx, const lcarev_poly* poly, char** json_out);

/* ---- reversibility ---- */
LCAREV_API lcarev_status lcarev_residues(lcarev_context* ctx, const lcarev_rule* rule, lcarev_method method,
                                         lcarev_report** out);
/* As lcarev_residues with SBP, writing one JSON line per step to path. */
LCAREV_API lcarev_status lcarev_residues_trace(lcarev_context* ctx, const lcarev_rule* rule, const char* path,
                                               lcarev_report** out);
/* Writes every DFA node of the cycle as JSON lines to path. */
LCAREV_API lcarev_status lcarev_emit_dfa(lcarev_context* ctx, const lcarev_rule* rule, const char* path);
LCAREV_API void lcarev_report_free(lcarev_report* report);
LCAREV_API lcarev_status lcarev_report_period(const lcarev_report* report, char** decimal_out);
LCAREV_API size_t lcarev_report_residue_count(const lcarev_report* report);
LCAREV_API uint64_t lcarev_report_residue(const lcarev_report* report, size_t index);
LCAREV_API lcarev_status lcarev_report_json(const lcarev_report* report, char** json_out);
/* n is a decimal string; *reversible receives 0 or 1. */
LCAREV_API lcarev_status lcarev_check(lcarev_context* ctx, const lcarev_rule* rule, const char* n, int* reversible);

/* ---- factoring, tables, generation, bench ---- */
LCAREV_API lcarev_status lcarev_factor_json(lcarev_context* ctx, const char* n, char** json_out);
/* Adds every irreducible of degree <= max_degree (at most 24) to the table. */
LCAREV_API lcarev_status lcarev_table_build(lcarev_context* ctx, size_t max_degree);
LCAREV_API lcarev_status lcarev_table_json(lcarev_context* ctx, char** json_out);
LCAREV_API void lcarev_gen_options_init(lcarev_gen_options* opts);
LCAREV_API lcarev_status lcarev_generate_json(lcarev_context* ctx, const char* T, const lcarev_gen_options* opts,
                                              char** json_out);
/* Lower bound with g = 1 for every odd prime power (decimal string). */
LCAREV_API lcarev_status lcarev_count_lower_bound(lcarev_context* ctx, const char* T, char** decimal_out);
/* suite_json may be NULL for the default suite. Records as JSON; the text
 * table is returned through table_out when it is not NULL. */
LCAREV_API lcarev_status lcarev_bench_json(lcarev_context* ctx, const char* suite_json, double budget_seconds,
                                           unsigned repeats, char** json_out, char** table_out);

#ifdef __cplusplus
}
#endif

#endif
