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

#include "lcarev/analysis.hpp"

#include "lcarev/error.hpp"

namespace lcarev {

ReversibilityReport decide_residues(const Rule& r, ResidueMethod method, const AnalysisOptions& opts) {
    const Rule norm = normalize_rule(r).rule;
    if (auto uni = unilateral_reversibility(norm)) {
        ReversibilityReport rep{1, {}, norm, true};
        if (*uni) rep.residues.push_back(0);
        return rep;
    }
    return method == ResidueMethod::Sbp ? reversible_residues_sbp(norm, opts.sbp) : reversible_residues_dfa(norm, opts.dfa);
}

bool decide_reversible(const Rule& r, const Natural& n, const SbpOptions& opts) {
    if (n < 1) fail(ErrorCode::InvalidInput, "cell count must be positive");
    const Rule norm = normalize_rule(r).rule;
    if (auto uni = unilateral_reversibility(norm)) return *uni;
    return sbp_reversible_at(norm, n, opts);
}

}  // namespace lcarev
