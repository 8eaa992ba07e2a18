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

#include "lcarev/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lcarev/analysis.hpp"
#include "lcarev/bitmatrix.hpp"
#include "lcarev/error.hpp"
#include "lcarev/oracle.hpp"

namespace lcarev {

std::string_view method_name(BenchMethod m) {
    switch (m) {
        case BenchMethod::Tms: return "TMS";
        case BenchMethod::Dfa: return "DFA";
        case BenchMethod::Pp: return "PP";
        case BenchMethod::Sbp: return "SBP";
    }
    return "?";
}

BenchMethod parse_method(std::string_view name) {
    std::string up(name);
    for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (auto m : kAllBenchMethods)
        if (method_name(m) == up) return m;
    fail(ErrorCode::ParseError, "unknown bench method '" + std::string(name) + "'");
}

std::vector<BenchCase> default_bench_suite() {
    static const char* const rules[] = {
        "10011",
        "1000011",
        "101100011",
        "10000001001",
        "1000010011001",
        "101100000000011",
        "10000000000101101",
        "1000000000010000001",
        "100000000000000001001",
        "10000000000000000000011",
        "1000000000000000000011011",
        "100000000000000000110000011",
    };
    std::vector<BenchCase> suite;
    for (const char* r : rules) suite.push_back({r, std::nullopt, {std::begin(kAllBenchMethods), std::end(kAllBenchMethods)}});
    return suite;
}

std::vector<BenchCase> parse_bench_suite(const std::string& json) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("bench suite is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) fail(ErrorCode::ParseError, "bench suite must be a JSON list");
    std::vector<BenchCase> suite;
    try {
        for (const auto& item : doc) {
            BenchCase c;
            c.rule = item.at("rule").get<std::string>();
            if (item.contains("left") && !item.at("left").is_null()) c.left = item.at("left").get<std::size_t>();
            if (item.contains("methods")) {
                for (const auto& m : item.at("methods")) c.methods.push_back(parse_method(m.get<std::string>()));
            } else {
                c.methods.assign(std::begin(kAllBenchMethods), std::end(kAllBenchMethods));
            }
            suite.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("malformed bench suite entry: ") + e.what());
    }
    return suite;
}

Natural tms_period(const Rule& r, const Deadline& deadline) {
    // Any period is at most B = 2^(size-1) - 1, so a candidate that holds over
    // 2B terms is forced (Fine and Wilf) to be the least period.
    const std::size_t deg = r.size() - 1;
    if (deg >= 63) fail(ErrorCode::CapExceeded, "determinant sequence is too long to scan");
    const std::size_t bound = std::max<std::size_t>(1, (std::size_t{1} << deg) - 1);
    std::vector<bool> d(2 * bound + 1);
    for (std::size_t n = 1; n <= 2 * bound; ++n) d[n] = det_gf2(transition_matrix(r, n), deadline);
    for (std::size_t p = 1; p < bound; ++p) {
        bool ok = true;
        for (std::size_t n = 1; n + p <= 2 * bound && ok; ++n) ok = d[n] == d[n + p];
        if (ok) return from_u64(p);
    }
    return from_u64(bound);
}

namespace {

struct Outcome {
    Natural period;
    std::optional<std::vector<std::uint64_t>> residues;
};

Outcome run_once(BenchMethod m, const Rule& r, const BenchOptions& opts) {
    const Deadline deadline = Deadline::after(opts.budget_seconds);
    switch (m) {
        case BenchMethod::Tms: return {tms_period(r, deadline), std::nullopt};
        case BenchMethod::Dfa: {
            DfaOptions d;
            d.deadline = deadline;
            return {from_u64(dfa_period(normalize_rule(r).rule, d)), std::nullopt};
        }
        case BenchMethod::Pp: return {rule_period(r, opts.period).period, std::nullopt};
        case BenchMethod::Sbp: {
            AnalysisOptions a;
            a.sbp.period = opts.period;
            a.sbp.deadline = deadline;
            a.sbp.step_budget = UINT64_MAX;
            auto rep = decide_residues(r, ResidueMethod::Sbp, a);
            return {rep.period, std::move(rep.residues)};
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown bench method");
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<BenchCase>& suite, const BenchOptions& opts) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> out;
    for (const auto& c : suite) {
        for (BenchMethod m : c.methods) {
            BenchRecord rec;
            rec.method = m;
            rec.rule = c.rule;
            rec.size = c.rule.size();
            try {
                const Rule r = parse_rule(c.rule, c.left);
                rec.left = r.left();
                std::vector<double> times;
                const unsigned runs = opts.repeats + (opts.warmup ? 1u : 0u);
                for (unsigned k = 0; k < std::max(runs, 1u); ++k) {
                    const auto t0 = clock::now();
                    Outcome o = run_once(m, r, opts);
                    const double dt = std::chrono::duration<double>(clock::now() - t0).count();
                    if (opts.warmup && k == 0 && runs > 1) continue;
                    times.push_back(dt);
                    rec.period = std::move(o.period);
                    rec.residues = std::move(o.residues);
                }
                std::sort(times.begin(), times.end());
                rec.elapsed = times[times.size() / 2];
            } catch (const Error& e) {
                if (e.code() == ErrorCode::Timeout) {
                    rec.timeout = true;
                    rec.elapsed = opts.budget_seconds;
                    rec.period.reset();
                    rec.residues.reset();
                } else {
                    rec.error = e.what();
                }
            }
            if (opts.on_record) opts.on_record(rec);
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::string render_bench_table(const std::vector<BenchRecord>& records) {
    std::vector<BenchMethod> methods;
    std::vector<std::pair<std::string, std::size_t>> rows;
    std::map<std::pair<std::string, BenchMethod>, const BenchRecord*> cells;
    for (const auto& r : records) {
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
        const auto key = std::make_pair(r.rule, r.left);
        if (std::find(rows.begin(), rows.end(), key) == rows.end()) rows.push_back(key);
        cells[{r.rule + "/" + std::to_string(r.left), r.method}] = &r;
    }
    std::sort(methods.begin(), methods.end());
    std::size_t rule_w = 4;
    for (const auto& [rule, left] : rows) rule_w = std::max(rule_w, rule.size());

    std::ostringstream os;
    char buf[64];
    os << "size  " << "rule" << std::string(rule_w - 4 + 2, ' ');
    for (auto m : methods) {
        std::snprintf(buf, sizeof buf, "%-12s", std::string(method_name(m)).c_str());
        os << buf;
    }
    os << "period\n";
    for (const auto& [rule, left] : rows) {
        std::snprintf(buf, sizeof buf, "%-6zu", rule.size());
        os << buf << rule << std::string(rule_w - rule.size() + 2, ' ');
        std::string period;
        for (auto m : methods) {
            auto it = cells.find({rule + "/" + std::to_string(left), m});
            std::string cell = "-";
            if (it != cells.end()) {
                const BenchRecord& r = *it->second;
                if (r.timeout) {
                    cell = "Timeout";
                } else if (r.error) {
                    cell = "Error";
                } else {
                    std::snprintf(buf, sizeof buf, "%.6f", r.elapsed);
                    cell = buf;
                    if (r.period && (period.empty() || m == BenchMethod::Pp)) period = to_decimal(*r.period);
                }
            }
            std::snprintf(buf, sizeof buf, "%-12s", cell.c_str());
            os << buf;
        }
        os << (period.empty() ? "-" : period) << '\n';
    }
    return os.str();
}

}  // namespace lcarev
