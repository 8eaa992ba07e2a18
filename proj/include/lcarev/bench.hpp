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

#ifndef LCAREV_BENCH_HPP
#define LCAREV_BENCH_HPP

// Timing harness comparing four ways to obtain a rule's period:
//   TMS  determinant of every transition matrix until the sequence repeats
//   DFA  walking the full node cycle
//   PP   polynomial factorization and orders
//   SBP  standard-basis-postfix traversal (period and residues)

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcarev/deadline.hpp"
#include "lcarev/natural.hpp"
#include "lcarev/period.hpp"
#include "lcarev/rule.hpp"

namespace lcarev {

enum class BenchMethod { Tms, Dfa, Pp, Sbp };

inline constexpr BenchMethod kAllBenchMethods[] = {BenchMethod::Tms, BenchMethod::Dfa, BenchMethod::Pp,
                                                   BenchMethod::Sbp};

std::string_view method_name(BenchMethod m);
/// Accepts TMS, DFA, PP, SBP in any case.
BenchMethod parse_method(std::string_view name);

struct BenchCase {
    std::string rule;
    std::optional<std::size_t> left;
    std::vector<BenchMethod> methods;
};

/// The twelve rules of sizes 5 to 27 used for the period comparison.
std::vector<BenchCase> default_bench_suite();
/// JSON list of {rule, left?, methods?}; missing methods means all four.
std::vector<BenchCase> parse_bench_suite(const std::string& json);

struct BenchRecord {
    BenchMethod method = BenchMethod::Pp;
    std::string rule;
    std::size_t left = 0;
    std::size_t size = 0;
    double elapsed = 0;  ///< median wall-clock seconds
    bool timeout = false;
    std::optional<Natural> period;
    std::optional<std::vector<std::uint64_t>> residues;
    std::optional<std::string> error;  ///< non-timeout failure
};

struct BenchOptions {
    double budget_seconds = 10.0;
    unsigned repeats = 3;
    bool warmup = true;
    PeriodOptions period;
    std::function<void(const BenchRecord&)> on_record;
};

/// Runs every (rule, method) cell one at a time so timings do not interfere.
/// A timeout or error in one cell never aborts the rest.
std::vector<BenchRecord> run_bench(const std::vector<BenchCase>& suite, const BenchOptions& opts = {});

/// Least p with d_n == d_{n+p} for n = 1..2p, where d_n = det M_n by dense
/// elimination. This is the period of the determinant sequence, which
/// divides the period of reversibility.
Natural tms_period(const Rule& r, const Deadline& deadline = {});

/// Text table: size, rule, then one column per method present.
std::string render_bench_table(const std::vector<BenchRecord>& records);

}  // namespace lcarev

#endif
