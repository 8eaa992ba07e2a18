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

// lcarev command-line tool. Talks to the library only through lcarev.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcarev/lcarev.h"

namespace {

using nlohmann::json;

struct Failure {
    lcarev_status status;
};

struct Globals {
    bool json_out = false;
    std::optional<long long> left;
    std::string factor_cache;
    std::string period_table;
    std::optional<double> budget;
    bool all_splits = false;
    std::optional<unsigned long long> max_steps;
};

// Owns a string returned by the library.
struct LibString {
    char* p = nullptr;
    ~LibString() { lcarev_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

template <typename T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    ~Handle() { Free(p); }
};

using RuleHandle = Handle<lcarev_rule, lcarev_rule_free>;
using PolyHandle = Handle<lcarev_poly, lcarev_poly_free>;
using ReportHandle = Handle<lcarev_report, lcarev_report_free>;

class Session {
public:
    explicit Session(const Globals& g) : g_(g) {
        check(lcarev_context_new(&ctx_));
        if (g.budget) check(lcarev_context_set_budget(ctx_, *g.budget));
        if (g.max_steps) check(lcarev_context_set_step_budget(ctx_, *g.max_steps));
        if (!g.factor_cache.empty()) check(lcarev_context_load_factor_cache(ctx_, g.factor_cache.c_str()));
        if (!g.period_table.empty()) check(lcarev_context_load_period_table(ctx_, g.period_table.c_str()));
    }
    ~Session() { lcarev_context_free(ctx_); }
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    lcarev_context* ctx() const { return ctx_; }

    void check(lcarev_status s) const {
        if (s == LCAREV_OK) return;
        const char* msg = ctx_ ? lcarev_last_error(ctx_) : "";
        std::cerr << "lcarev: " << (msg && *msg ? msg : lcarev_status_name(s)) << '\n';
        throw Failure{s};
    }

    // Writes the caches back so later runs reuse the work.
    void persist() const {
        if (!g_.factor_cache.empty()) check(lcarev_context_save_factor_cache(ctx_, g_.factor_cache.c_str()));
        if (!g_.period_table.empty()) check(lcarev_context_save_period_table(ctx_, g_.period_table.c_str()));
    }

    int64_t left() const { return g_.left ? static_cast<int64_t>(*g_.left) : LCAREV_DEFAULT_LEFT; }

    void rule(const std::string& bits, RuleHandle& out) const {
        check(lcarev_rule_parse(ctx_, bits.c_str(), left(), &out.p));
    }

private:
    const Globals& g_;
    lcarev_context* ctx_ = nullptr;
};

std::string env_or(const char* name, const std::string& current) {
    if (!current.empty()) return current;
    const char* v = std::getenv(name);
    return v ? v : "";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "lcarev: IoError: cannot read " << path << '\n';
        throw Failure{LCAREV_E_IO};
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string join(const json& list) {
    std::string out;
    for (const auto& v : list) {
        if (!out.empty()) out += ", ";
        out += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
}

// ---------------------------------------------------------------- commands

void cmd_period(const Globals& g, const std::string& rule_text, const std::string& poly_text) {
    Session s(g);
    PolyHandle poly;
    RuleHandle rule;
    if (!rule_text.empty()) {
        s.rule(rule_text, rule);
        s.check(lcarev_rule_to_poly(s.ctx(), rule.p, &poly.p));
    } else {
        s.check(lcarev_poly_parse(s.ctx(), poly_text.c_str(), &poly.p));
    }
    LibString out;
    s.check(lcarev_poly_period_json(s.ctx(), poly.p, &out.p));
    s.persist();
    json j = json::parse(out.str());
    if (rule.p) {
        LibString bits;
        s.check(lcarev_rule_bits(rule.p, &bits.p));
        j["rule"] = {{"rule", bits.str()}, {"left", lcarev_rule_left(rule.p)}, {"right", lcarev_rule_right(rule.p)}};
    }
    if (g.json_out) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::cout << "polynomial: " << j["poly"]["sparse"].get<std::string>() << "  (" << j["poly"]["bits"].get<std::string>()
              << ")\n";
    std::cout << "period: " << j["period"].get<std::string>() << '\n';
    std::cout << "  lcm of factor periods: " << j["lcm_part"].get<std::string>()
              << ", power of two: " << j["power_part"].get<std::string>() << '\n';
    for (const auto& f : j["factors"])
        std::cout << "  factor " << f["sparse"].get<std::string>() << "  multiplicity " << f["multiplicity"].get<unsigned>()
                  << "  period " << f["period"].get<std::string>() << '\n';
}

void cmd_residues(const Globals& g, const std::string& rule_text, const std::string& method, const std::string& trace,
                  const std::string& emit_dfa) {
    Session s(g);
    RuleHandle rule;
    s.rule(rule_text, rule);
    ReportHandle rep;
    if (!trace.empty()) {
        s.check(lcarev_residues_trace(s.ctx(), rule.p, trace.c_str(), &rep.p));
    } else {
        s.check(lcarev_residues(s.ctx(), rule.p, method == "dfa" ? LCAREV_METHOD_DFA : LCAREV_METHOD_SBP, &rep.p));
    }
    if (!emit_dfa.empty()) s.check(lcarev_emit_dfa(s.ctx(), rule.p, emit_dfa.c_str()));
    s.persist();
    LibString out;
    s.check(lcarev_report_json(rep.p, &out.p));
    if (g.json_out) {
        std::cout << out.str();
        return;
    }
    const json j = json::parse(out.str());
    std::cout << "rule: " << j["rule"].get<std::string>() << "  (left " << j["left"].get<std::size_t>() << ", right "
              << j["right"].get<std::size_t>() << ")\n";
    if (j["unilateral"].get<bool>()) {
        std::cout << (j["residues"].empty() ? "one-sided, irreversible for every n\n" : "one-sided, reversible for every n\n");
        return;
    }
    std::cout << "period: " << j["period"].get<std::string>() << '\n';
    std::cout << "reversible iff n mod " << j["period"].get<std::string>() << " in {" << join(j["residues"]) << "}\n";
}

void cmd_check(const Globals& g, const std::string& rule_text, const std::string& n) {
    Session s(g);
    RuleHandle rule;
    s.rule(rule_text, rule);
    int rev = 0;
    s.check(lcarev_check(s.ctx(), rule.p, n.c_str(), &rev));
    s.persist();
    if (g.json_out) {
        LibString bits;
        s.check(lcarev_rule_bits(rule.p, &bits.p));
        std::cout << json{{"rule", bits.str()}, {"left", lcarev_rule_left(rule.p)}, {"n", n}, {"reversible", rev != 0}}.dump(2)
                  << '\n';
        return;
    }
    std::cout << (rev ? "reversible" : "irreversible") << '\n';
}

void cmd_generate(const Globals& g, const std::string& T, const std::string& g_mode, const std::string& strategy,
                  unsigned long long limit, unsigned long long max_degree) {
    Session s(g);
    lcarev_gen_options o;
    lcarev_gen_options_init(&o);
    o.g_mode = g_mode == "paper" ? LCAREV_G_PAPER : LCAREV_G_EXACT;
    o.strategy = strategy == "complete" ? LCAREV_STRATEGY_COMPLETE : LCAREV_STRATEGY_CONSTRUCTION;
    o.limit = limit;
    o.max_degree = max_degree;
    o.all_splits = g.all_splits ? 1 : 0;
    LibString out;
    s.check(lcarev_generate_json(s.ctx(), T.c_str(), &o, &out.p));
    s.persist();
    if (g.json_out) {
        std::cout << out.str();
        return;
    }
    const json j = json::parse(out.str());
    std::cout << "T = " << j["T"].get<std::string>() << "  (t = " << j["t"].get<unsigned>() << ")\n";
    for (const auto& v : j["g_values"])
        std::cout << "  g(" << v["modulus"].get<std::string>() << ") = " << v["g"].get<std::string>() << '\n';
    std::cout << "lower bound: " << j["lower_bound"].get<std::string>() << '\n';
    std::cout << "polynomials: " << j["count"].get<std::size_t>() << (j["truncated"].get<bool>() ? " (truncated)" : "")
              << '\n';
    for (const auto& p : j["polynomials"])
        std::cout << "  " << p["sparse"].get<std::string>() << "  rule " << p["rule"].get<std::string>() << " left "
                  << p["left"].get<std::size_t>() << '\n';
}

void cmd_factor(const Globals& g, const std::string& n) {
    Session s(g);
    LibString out;
    s.check(lcarev_factor_json(s.ctx(), n.c_str(), &out.p));
    s.persist();
    if (g.json_out) {
        std::cout << out.str();
        return;
    }
    const json j = json::parse(out.str());
    std::string text;
    for (const auto& f : j["factors"]) {
        if (!text.empty()) text += " * ";
        text += f[0].get<std::string>();
        if (f[1].get<unsigned>() > 1) text += "^" + std::to_string(f[1].get<unsigned>());
    }
    std::cout << j["value"].get<std::string>() << " = " << (text.empty() ? "1" : text) << '\n';
}

void cmd_table(const Globals& g, std::size_t max_degree) {
    Session s(g);
    s.check(lcarev_table_build(s.ctx(), max_degree));
    s.persist();
    if (g.period_table.empty() || g.json_out) {
        LibString out;
        s.check(lcarev_table_json(s.ctx(), &out.p));
        std::cout << out.str();
        return;
    }
    std::cout << "period table written to " << g.period_table << '\n';
}

void cmd_bench(const Globals& g, const std::string& suite_path, unsigned repeats) {
    Session s(g);
    const std::string suite = suite_path.empty() ? "" : read_file(suite_path);
    LibString out, table;
    s.check(lcarev_bench_json(s.ctx(), suite_path.empty() ? nullptr : suite.c_str(), g.budget.value_or(10.0), repeats,
                              &out.p, &table.p));
    s.persist();
    std::cout << (g.json_out ? out.str() : table.str());
}

void cmd_simulate(const Globals& g, const std::string& rule_text, const std::string& config, unsigned long long steps) {
    Session s(g);
    RuleHandle rule;
    s.rule(rule_text, rule);
    LibString out;
    s.check(lcarev_simulate(s.ctx(), rule.p, config.c_str(), steps, &out.p));
    if (g.json_out) {
        std::cout << out.str();
        return;
    }
    for (const auto& c : json::parse(out.str())) std::cout << c.get<std::string>() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reversibility of linear cellular automata over GF(2) with null boundaries"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(lcarev_version()));

    Globals g;
    app.add_flag("--json", g.json_out, "Emit JSON instead of text");
    app.add_option("--left", g.left, "Left radius rL of the rule (default floor((m-1)/2))")->check(CLI::NonNegativeNumber);
    app.add_option("--factor-cache", g.factor_cache, "Integer factorization cache (env LCAREV_FACTOR_CACHE)");
    app.add_option("--period-table", g.period_table, "Irreducible period table (env LCAREV_PERIOD_TABLE)");
    app.add_option("--budget", g.budget, "Wall-clock budget in seconds (0 disables; bench default 10)");
    app.add_flag("--all-splits", g.all_splits, "generate: emit every bilateral split of each rule");
    app.add_option("--max-steps", g.max_steps, "Longest SBP walk before enumeration refuses or a query jumps");

    std::string rule_text, poly_text, method = "sbp", trace, emit_dfa, n, T, g_mode = "exact",
                                      strategy = "construction", suite, config;
    unsigned long long limit = 0, max_degree = 0, steps = 1;
    std::size_t table_degree = 16;
    unsigned repeats = 3;

    auto* period = app.add_subcommand("period", "Period of reversibility of a rule or polynomial");
    auto* period_rule = period->add_option("--rule", rule_text, "Coefficient string lambda_-rL .. lambda_rR");
    auto* period_poly = period->add_option("--poly", poly_text, "Polynomial, MSB-first bits or sparse form");
    period_rule->excludes(period_poly);
    period->callback([&] {
        if (rule_text.empty() && poly_text.empty()) throw CLI::ValidationError("period", "--rule or --poly is required");
    });

    auto* residues = app.add_subcommand("residues", "Reversible residues of n modulo the period");
    residues->add_option("--rule", rule_text, "Coefficient string")->required();
    residues->add_option("--method", method, "sbp or dfa")->check(CLI::IsMember({"sbp", "dfa"}));
    residues->add_option("--trace", trace, "Write each SBP step as a JSON line");
    residues->add_option("--emit-dfa", emit_dfa, "Write every DFA node as a JSON line");

    auto* check = app.add_subcommand("check", "Is the n-cell automaton reversible?");
    check->add_option("--rule", rule_text, "Coefficient string")->required();
    check->add_option("-n,--n", n, "Number of cells")->required();

    auto* generate = app.add_subcommand("generate", "Polynomials and rules with period T");
    generate->add_option("T", T, "Target period")->required();
    generate->add_option("--g-mode", g_mode, "exact (computed g) or paper (g = 1)")
        ->check(CLI::IsMember({"exact", "paper"}));
    generate->add_option("--strategy", strategy, "construction or complete")
        ->check(CLI::IsMember({"construction", "complete"}));
    generate->add_option("--limit", limit, "Stop after this many polynomials");
    generate->add_option("--max-degree", max_degree, "Skip polynomials above this degree");

    auto* factor = app.add_subcommand("factor", "Factor a positive integer");
    factor->add_option("N", n, "Integer")->required();

    auto* table = app.add_subcommand("table", "Build the irreducible period table");
    table->add_option("--max-degree", table_degree, "Largest degree (at most 24)")->check(CLI::Range(1, 24));

    auto* bench = app.add_subcommand("bench", "Compare TMS, DFA, PP and SBP timings");
    bench->add_option("--suite", suite, "JSON list of {rule, left?, methods?}");
    bench->add_option("--repeats", repeats, "Timed runs per cell (median reported)")->check(CLI::Range(1, 100));

    auto* simulate = app.add_subcommand("simulate", "Evolve a configuration");
    simulate->add_option("--rule", rule_text, "Coefficient string")->required();
    simulate->add_option("--config", config, "Initial configuration, leftmost cell first")->required();
    simulate->add_option("--steps", steps, "Number of steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : LCAREV_E_INVALID_ARGUMENT;
    }

    g.factor_cache = env_or("LCAREV_FACTOR_CACHE", g.factor_cache);
    g.period_table = env_or("LCAREV_PERIOD_TABLE", g.period_table);

    try {
        if (*period) cmd_period(g, rule_text, poly_text);
        else if (*residues) cmd_residues(g, rule_text, method, trace, emit_dfa);
        else if (*check) cmd_check(g, rule_text, n);
        else if (*generate) cmd_generate(g, T, g_mode, strategy, limit, max_degree);
        else if (*factor) cmd_factor(g, n);
        else if (*table) cmd_table(g, table_degree);
        else if (*bench) cmd_bench(g, suite, repeats);
        else if (*simulate) cmd_simulate(g, rule_text, config, steps);
    } catch (const Failure& f) {
        return static_cast<int>(f.status);
    }
    return 0;
}
