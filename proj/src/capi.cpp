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

#include "lcarev/lcarev.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "lcarev/analysis.hpp"
#include "lcarev/bench.hpp"
#include "lcarev/error.hpp"
#include "lcarev/gen.hpp"
#include "lcarev/json_io.hpp"
#include "lcarev/oracle.hpp"
#include "lcarev/period.hpp"
#include "lcarev/sbp.hpp"

struct lcarev_context {
    lcarev::FactorCache factors;
    lcarev::PeriodTable table;
    double budget_seconds = 30.0;
    std::uint64_t step_budget = lcarev::kDefaultStepBudget;
    std::string last_error;

    lcarev::Deadline deadline() const {
        return budget_seconds > 0 ? lcarev::Deadline::after(budget_seconds) : lcarev::Deadline::none();
    }
    lcarev::FactorOptions factor_options() {
        return {budget_seconds > 0 ? budget_seconds : 0.0, &factors, true};
    }
    lcarev::PeriodOptions period_options() { return {lcarev::kDefaultPeriodDegreeCap, factor_options()}; }
    lcarev::SbpOptions sbp_options() {
        lcarev::SbpOptions o;
        o.period = period_options();
        o.step_budget = step_budget;
        o.deadline = deadline();
        return o;
    }
};

struct lcarev_rule {
    lcarev::Rule rule;
};

struct lcarev_poly {
    lcarev::Poly poly;
};

struct lcarev_report {
    lcarev::ReversibilityReport report;
};

namespace {

using lcarev::ErrorCode;

lcarev_status to_status(ErrorCode c) { return static_cast<lcarev_status>(static_cast<int>(c)); }

// Runs f, translating exceptions into a status and the context's message.
template <typename F>
lcarev_status guarded(lcarev_context* ctx, F&& f) {
    if (!ctx) return LCAREV_E_INVALID_ARGUMENT;
    ctx->last_error.clear();
    try {
        f();
        return LCAREV_OK;
    } catch (const lcarev::Error& e) {
        ctx->last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        ctx->last_error = "Internal: out of memory";
    } catch (const std::exception& e) {
        ctx->last_error = std::string("Internal: ") + e.what();
    }
    return LCAREV_E_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool cond, const char* what) {
    if (!cond) lcarev::fail(ErrorCode::InvalidArgument, what);
}

std::optional<std::size_t> split_arg(std::int64_t left) {
    if (left == LCAREV_DEFAULT_LEFT) return std::nullopt;
    require(left >= 0, "left must be non-negative or LCAREV_DEFAULT_LEFT");
    return static_cast<std::size_t>(left);
}

std::ofstream open_output(const char* path) {
    require(path != nullptr, "path is null");
    std::ofstream out(path);
    if (!out) lcarev::fail(ErrorCode::IoError, std::string("cannot write ") + path);
    return out;
}

}  // namespace

extern "C" {

const char* lcarev_version(void) { return "0.1.0"; }

const char* lcarev_status_name(lcarev_status status) {
    // error_name returns views of string literals, so data() is terminated.
    return lcarev::error_name(static_cast<ErrorCode>(status)).data();
}

void lcarev_string_free(char* s) { std::free(s); }

lcarev_status lcarev_context_new(lcarev_context** out) {
    if (!out) return LCAREV_E_INVALID_ARGUMENT;
    *out = new (std::nothrow) lcarev_context();
    return *out ? LCAREV_OK : LCAREV_E_INTERNAL;
}

void lcarev_context_free(lcarev_context* ctx) { delete ctx; }

const char* lcarev_last_error(const lcarev_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

lcarev_status lcarev_context_set_budget(lcarev_context* ctx, double seconds) {
    return guarded(ctx, [&] { ctx->budget_seconds = seconds; });
}

lcarev_status lcarev_context_set_step_budget(lcarev_context* ctx, uint64_t steps) {
    return guarded(ctx, [&] { ctx->step_budget = steps; });
}

lcarev_status lcarev_context_load_factor_cache(lcarev_context* ctx, const char* path) {
    return guarded(ctx, [&] {
        require(path != nullptr, "path is null");
        ctx->factors = lcarev::FactorCache::load(path);
    });
}

lcarev_status lcarev_context_save_factor_cache(lcarev_context* ctx, const char* path) {
    return guarded(ctx, [&] {
        require(path != nullptr, "path is null");
        ctx->factors.save(path);
    });
}

lcarev_status lcarev_context_load_period_table(lcarev_context* ctx, const char* path) {
    return guarded(ctx, [&] {
        require(path != nullptr, "path is null");
        ctx->table = lcarev::PeriodTable::load(path);
    });
}

lcarev_status lcarev_context_save_period_table(lcarev_context* ctx, const char* path) {
    return guarded(ctx, [&] {
        require(path != nullptr, "path is null");
        ctx->table.save(path);
    });
}

// ---------------------------------------------------------------- rules

lcarev_status lcarev_rule_parse(lcarev_context* ctx, const char* bits, int64_t left, lcarev_rule** out) {
    return guarded(ctx, [&] {
        require(bits && out, "null argument");
        *out = new lcarev_rule{lcarev::parse_rule(bits, split_arg(left))};
    });
}

void lcarev_rule_free(lcarev_rule* rule) { delete rule; }
size_t lcarev_rule_size(const lcarev_rule* rule) { return rule ? rule->rule.size() : 0; }
size_t lcarev_rule_left(const lcarev_rule* rule) { return rule ? rule->rule.left() : 0; }
size_t lcarev_rule_right(const lcarev_rule* rule) { return rule ? rule->rule.right() : 0; }

lcarev_status lcarev_rule_bits(const lcarev_rule* rule, char** out) {
    if (!rule || !out) return LCAREV_E_INVALID_ARGUMENT;
    try {
        *out = dup_string(rule->rule.bits());
    } catch (const std::bad_alloc&) {
        return LCAREV_E_INTERNAL;
    }
    return LCAREV_OK;
}

lcarev_status lcarev_rule_normalize(lcarev_context* ctx, const lcarev_rule* rule, lcarev_rule** out,
                                    size_t* shift) {
    return guarded(ctx, [&] {
        require(rule && out, "null argument");
        auto n = lcarev::normalize_rule(rule->rule);
        if (shift) *shift = n.shift;
        *out = new lcarev_rule{std::move(n.rule)};
    });
}

lcarev_status lcarev_rule_to_poly(lcarev_context* ctx, const lcarev_rule* rule, lcarev_poly** out) {
    return guarded(ctx, [&] {
        require(rule && out, "null argument");
        *out = new lcarev_poly{lcarev::rule_to_poly(rule->rule)};
    });
}

lcarev_status lcarev_simulate(lcarev_context* ctx, const lcarev_rule* rule, const char* config, uint64_t steps,
                              char** json_out) {
    return guarded(ctx, [&] {
        require(rule && config && json_out, "null argument");
        lcarev::Configuration c = lcarev::parse_configuration(config);
        lcarev::Json trace = lcarev::Json::array({c.to_string()});
        const lcarev::Deadline deadline = ctx->deadline();
        for (uint64_t k = 0; k < steps; ++k) {
            deadline.check();
            c = lcarev::step_config(rule->rule, c);
            trace.push_back(c.to_string());
        }
        *json_out = dup_string(lcarev::render_json(trace));
    });
}

// ---------------------------------------------------------------- polys

lcarev_status lcarev_poly_parse(lcarev_context* ctx, const char* text, lcarev_poly** out) {
    return guarded(ctx, [&] {
        require(text && out, "null argument");
        *out = new lcarev_poly{lcarev::Poly::parse(text)};
    });
}

void lcarev_poly_free(lcarev_poly* poly) { delete poly; }

lcarev_status lcarev_poly_bits(const lcarev_poly* poly, char** out) {
    if (!poly || !out) return LCAREV_E_INVALID_ARGUMENT;
    try {
        *out = dup_string(poly->poly.to_bits());
    } catch (const std::bad_alloc&) {
        return LCAREV_E_INTERNAL;
    }
    return LCAREV_OK;
}

lcarev_status lcarev_poly_sparse(const lcarev_poly* poly, char** out) {
    if (!poly || !out) return LCAREV_E_INVALID_ARGUMENT;
    try {
        *out = dup_string(poly->poly.to_sparse());
    } catch (const std::bad_alloc&) {
        return LCAREV_E_INTERNAL;
    }
    return LCAREV_OK;
}

lcarev_status lcarev_poly_to_rule(lcarev_context* ctx, const lcarev_poly* poly, int64_t left, lcarev_rule** out) {
    return guarded(ctx, [&] {
        require(poly && out, "null argument");
        const auto split = split_arg(left);
        const std::size_t size = poly->poly.is_zero() ? 0 : poly->poly.deg() + 1;
        *out = new lcarev_rule{lcarev::poly_to_rule(poly->poly, split.value_or(lcarev::default_left(size)))};
    });
}

lcarev_status lcarev_poly_is_irreducible(lcarev_context* ctx, const lcarev_poly* poly, int* out) {
    return guarded(ctx, [&] {
        require(poly && out, "null argument");
        *out = lcarev::is_irreducible(poly->poly) ? 1 : 0;
    });
}

// ---------------------------------------------------------------- periods

lcarev_status lcarev_poly_period(lcarev_context* ctx, const lcarev_poly* poly, char** decimal_out) {
    return guarded(ctx, [&] {
        require(poly && decimal_out, "null argument");
        *decimal_out = dup_string(lcarev::to_decimal(lcarev::poly_period(poly->poly, ctx->period_options()).period));
    });
}

lcarev_status lcarev_rule_period(lcarev_context* ctx, const lcarev_rule* rule, char** decimal_out) {
    return guarded(ctx, [&] {
        require(rule && decimal_out, "null argument");
        *decimal_out = dup_string(lcarev::to_decimal(lcarev::rule_period(rule->rule, ctx->period_options()).period));
    });
}

lcarev_status lcarev_poly_period_json(lcarev_context* ctx, const lcarev_poly* poly, char** json_out) {
    return guarded(ctx, [&] {
        require(poly && json_out, "null argument");
        lcarev::Json j = lcarev::period_json(lcarev::poly_period(poly->poly, ctx->period_options()));
        j["poly"] = lcarev::poly_json(poly->poly);
        *json_out = dup_string(lcarev::render_json(j));
    });
}

// ---------------------------------------------------------------- reversibility

lcarev_status lcarev_residues(lcarev_context* ctx, const lcarev_rule* rule, lcarev_method method,
                              lcarev_report** out) {
    return guarded(ctx, [&] {
        require(rule && out, "null argument");
        require(method == LCAREV_METHOD_SBP || method == LCAREV_METHOD_DFA, "unknown method");
        lcarev::AnalysisOptions a;
        a.sbp = ctx->sbp_options();
        a.dfa.deadline = ctx->deadline();
        const auto m = method == LCAREV_METHOD_SBP ? lcarev::ResidueMethod::Sbp : lcarev::ResidueMethod::Dfa;
        *out = new lcarev_report{lcarev::decide_residues(rule->rule, m, a)};
    });
}

lcarev_status lcarev_residues_trace(lcarev_context* ctx, const lcarev_rule* rule, const char* path,
                                    lcarev_report** out) {
    return guarded(ctx, [&] {
        require(rule && out, "null argument");
        std::ofstream file = open_output(path);
        lcarev::AnalysisOptions a;
        a.sbp = ctx->sbp_options();
        a.sbp.on_step = [&](const lcarev::SubsetNode& s, std::size_t rank) {
            lcarev::Json rows = lcarev::Json::array();
            for (std::size_t j = 0; j < s.rows.size(); ++j) rows.push_back(s.postfix_string(j));
            file << lcarev::Json{{"step", s.step_index}, {"rank", rank}, {"postfixes", rows}}.dump() << '\n';
        };
        *out = new lcarev_report{lcarev::decide_residues(rule->rule, lcarev::ResidueMethod::Sbp, a)};
    });
}

lcarev_status lcarev_emit_dfa(lcarev_context* ctx, const lcarev_rule* rule, const char* path) {
    return guarded(ctx, [&] {
        require(rule != nullptr, "null argument");
        std::ofstream file = open_output(path);
        lcarev::DfaOptions d;
        d.deadline = ctx->deadline();
        d.on_node = [&](const lcarev::Node& node, std::uint64_t index, bool reversible) {
            lcarev::Json tuples = lcarev::Json::array();
            for (std::size_t i = 0; i < node.tuples.size(); ++i) tuples.push_back(node.tuple_string(i));
            file << lcarev::Json{{"index", index}, {"reversible", reversible}, {"tuples", tuples}}.dump() << '\n';
        };
        lcarev::dfa_period(lcarev::normalize_rule(rule->rule).rule, d);
    });
}

void lcarev_report_free(lcarev_report* report) { delete report; }

lcarev_status lcarev_report_period(const lcarev_report* report, char** decimal_out) {
    if (!report || !decimal_out) return LCAREV_E_INVALID_ARGUMENT;
    try {
        *decimal_out = dup_string(lcarev::to_decimal(report->report.period));
    } catch (const std::bad_alloc&) {
        return LCAREV_E_INTERNAL;
    }
    return LCAREV_OK;
}

size_t lcarev_report_residue_count(const lcarev_report* report) {
    return report ? report->report.residues.size() : 0;
}

uint64_t lcarev_report_residue(const lcarev_report* report, size_t index) {
    if (!report || index >= report->report.residues.size()) return UINT64_MAX;
    return report->report.residues[index];
}

lcarev_status lcarev_report_json(const lcarev_report* report, char** json_out) {
    if (!report || !json_out) return LCAREV_E_INVALID_ARGUMENT;
    try {
        *json_out = dup_string(lcarev::render_json(lcarev::report_json(report->report)));
    } catch (const std::bad_alloc&) {
        return LCAREV_E_INTERNAL;
    }
    return LCAREV_OK;
}

lcarev_status lcarev_check(lcarev_context* ctx, const lcarev_rule* rule, const char* n, int* reversible) {
    return guarded(ctx, [&] {
        require(rule && n && reversible, "null argument");
        *reversible = lcarev::decide_reversible(rule->rule, lcarev::parse_natural(n), ctx->sbp_options()) ? 1 : 0;
    });
}

// ---------------------------------------------------------------- factoring, tables, generation

lcarev_status lcarev_factor_json(lcarev_context* ctx, const char* n, char** json_out) {
    return guarded(ctx, [&] {
        require(n && json_out, "null argument");
        const lcarev::Natural value = lcarev::parse_natural(n);
        if (value < 1) lcarev::fail(ErrorCode::InvalidInput, "only positive integers can be factored");
        *json_out = dup_string(lcarev::render_json(lcarev::factored_json(lcarev::factor_int(value, ctx->factor_options()))));
    });
}

lcarev_status lcarev_table_build(lcarev_context* ctx, size_t max_degree) {
    return guarded(ctx, [&] {
        const lcarev::PeriodTable built = lcarev::PeriodTable::build(max_degree, ctx->period_options());
        for (const auto& e : built.entries()) ctx->table.insert(e.poly, e.period);
    });
}

lcarev_status lcarev_table_json(lcarev_context* ctx, char** json_out) {
    return guarded(ctx, [&] {
        require(json_out != nullptr, "null argument");
        *json_out = dup_string(ctx->table.to_json() + "\n");
    });
}

void lcarev_gen_options_init(lcarev_gen_options* opts) {
    if (!opts) return;
    *opts = lcarev_gen_options{LCAREV_G_EXACT, LCAREV_STRATEGY_CONSTRUCTION, 0, 0, 0};
}

lcarev_status lcarev_generate_json(lcarev_context* ctx, const char* T, const lcarev_gen_options* opts,
                                   char** json_out) {
    return guarded(ctx, [&] {
        require(T && json_out, "null argument");
        lcarev_gen_options o;
        lcarev_gen_options_init(&o);
        if (opts) o = *opts;
        lcarev::GenOptions g;
        g.g_mode = o.g_mode == LCAREV_G_PAPER ? lcarev::GMode::Paper : lcarev::GMode::Exact;
        g.strategy = o.strategy == LCAREV_STRATEGY_COMPLETE ? lcarev::GenStrategy::Complete
                                                            : lcarev::GenStrategy::Construction;
        if (o.limit) g.limit = o.limit;
        if (o.max_degree) g.max_degree = o.max_degree;
        g.all_splits = o.all_splits != 0;
        g.table = &ctx->table;
        g.factor = ctx->factor_options();
        g.deadline = ctx->deadline();
        *json_out = dup_string(lcarev::render_json(lcarev::gen_json(lcarev::generate_polynomials(lcarev::parse_natural(T), g))));
    });
}

lcarev_status lcarev_count_lower_bound(lcarev_context* ctx, const char* T, char** decimal_out) {
    return guarded(ctx, [&] {
        require(T && decimal_out, "null argument");
        const auto spec = lcarev::decompose_period(lcarev::parse_natural(T), ctx->factor_options());
        const std::vector<lcarev::Natural> ones(spec.r(), lcarev::Natural(1));
        *decimal_out = dup_string(lcarev::to_decimal(lcarev::count_lower_bound(spec, ones)));
    });
}

lcarev_status lcarev_bench_json(lcarev_context* ctx, const char* suite_json, double budget_seconds,
                                unsigned repeats, char** json_out, char** table_out) {
    return guarded(ctx, [&] {
        require(json_out != nullptr, "null argument");
        require(budget_seconds > 0, "bench budget must be positive");
        const auto suite = suite_json ? lcarev::parse_bench_suite(suite_json) : lcarev::default_bench_suite();
        lcarev::BenchOptions b;
        b.budget_seconds = budget_seconds;
        b.repeats = repeats == 0 ? 1 : repeats;
        b.period = ctx->period_options();
        const auto records = lcarev::run_bench(suite, b);
        *json_out = dup_string(lcarev::render_json(lcarev::bench_json(records)));
        if (table_out) *table_out = dup_string(lcarev::render_bench_table(records));
    });
}

}  // extern "C"
