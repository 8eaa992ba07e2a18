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

#include "lcarev/json_io.hpp"

namespace lcarev {

Json poly_json(const Poly& p) {
    return {{"bits", p.to_bits()}, {"sparse", p.to_sparse()}, {"degree", p.is_zero() ? -1 : static_cast<long>(p.deg())}};
}

Json rule_json(const Rule& r) {
    return {{"rule", r.bits()}, {"left", r.left()}, {"right", r.right()}, {"size", r.size()}};
}

Json period_json(const PeriodResult& r) {
    Json factors = Json::array();
    for (const auto& fp : r.factor_periods)
        factors.push_back({{"poly", fp.factor.to_bits()},
                           {"sparse", fp.factor.to_sparse()},
                           {"multiplicity", fp.multiplicity},
                           {"period", to_decimal(fp.period)}});
    return {{"period", to_decimal(r.period)},
            {"lcm_part", to_decimal(r.lcm_part)},
            {"power_part", to_decimal(r.power_part)},
            {"factors", std::move(factors)}};
}

Json report_json(const ReversibilityReport& r) {
    Json j = rule_json(r.rule);
    j["period"] = to_decimal(r.period);
    j["residues"] = r.residues;
    j["unilateral"] = r.unilateral;
    return j;
}

Json factored_json(const FactoredInt& f) {
    Json factors = Json::array();
    for (const auto& pp : f.factors) factors.push_back(Json::array({to_decimal(pp.prime), pp.exponent}));
    return {{"value", to_decimal(f.value)}, {"factors", std::move(factors)}};
}

Json gen_json(const GenOutput& g) {
    Json odd = Json::array();
    for (const auto& pp : g.spec.odd_part) odd.push_back(Json::array({to_decimal(pp.prime), pp.exponent}));
    Json gv = Json::array();
    for (const auto& v : g.g_values) gv.push_back({{"modulus", to_decimal(v.modulus)}, {"g", to_decimal(v.g)}});
    Json polys = Json::array();
    for (const auto& e : g.entries)
        for (const auto& r : e.rules)
            polys.push_back({{"poly", e.poly.to_bits()},
                             {"sparse", e.poly.to_sparse()},
                             {"rule", r.bits()},
                             {"left", r.left()},
                             {"period", to_decimal(g.spec.T)}});
    return {{"T", to_decimal(g.spec.T)},
            {"t", g.spec.t},
            {"odd_part", std::move(odd)},
            {"lower_bound", to_decimal(g.lower_bound)},
            {"g_values", std::move(gv)},
            {"count", g.entries.size()},
            {"truncated", g.truncated},
            {"polynomials", std::move(polys)}};
}

Json bench_json(const std::vector<BenchRecord>& records) {
    Json out = Json::array();
    for (const auto& r : records) {
        Json j = {{"method", std::string(method_name(r.method))},
                  {"rule", r.rule},
                  {"left", r.left},
                  {"size", r.size},
                  {"elapsed", r.elapsed},
                  {"timeout", r.timeout}};
        j["period"] = r.period ? Json(to_decimal(*r.period)) : Json(nullptr);
        if (r.residues) j["residues"] = *r.residues;
        if (r.error) j["error"] = *r.error;
        out.push_back(std::move(j));
    }
    return out;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lcarev
