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

#ifndef LCAREV_JSON_IO_HPP
#define LCAREV_JSON_IO_HPP

// JSON renderings of results. Large integers are decimal strings so that no
// value loses precision; objects use sorted keys so output is byte-stable.

#include <json.hpp>

#include "lcarev/bench.hpp"
#include "lcarev/gen.hpp"
#include "lcarev/intfactor.hpp"
#include "lcarev/period.hpp"
#include "lcarev/report.hpp"
#include "lcarev/rule.hpp"

namespace lcarev {

using Json = nlohmann::json;

Json poly_json(const Poly& p);
Json rule_json(const Rule& r);
Json period_json(const PeriodResult& r);
Json report_json(const ReversibilityReport& r);
Json factored_json(const FactoredInt& f);
Json gen_json(const GenOutput& g);
Json bench_json(const std::vector<BenchRecord>& records);

/// Two-space indented dump with a trailing newline.
std::string render_json(const Json& j);

}  // namespace lcarev

#endif
