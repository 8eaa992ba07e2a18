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

#ifndef LCAREV_ANALYSIS_HPP
#define LCAREV_ANALYSIS_HPP

// Entry points that accept any rule: the rule is normalized first, one-sided
// rules take the lambda_0 shortcut, bilateral ones go to SBP or the DFA.

#include "lcarev/oracle.hpp"
#include "lcarev/report.hpp"
#include "lcarev/sbp.hpp"

namespace lcarev {

enum class ResidueMethod { Sbp, Dfa };

struct AnalysisOptions {
    SbpOptions sbp;
    DfaOptions dfa;
};

/// For one-sided rules the report has period 1 and residue 0 iff lambda_0.
ReversibilityReport decide_residues(const Rule& r, ResidueMethod method = ResidueMethod::Sbp,
                                    const AnalysisOptions& opts = {});

/// Reversibility of the n-cell automaton.
bool decide_reversible(const Rule& r, const Natural& n, const SbpOptions& opts = {});

}  // namespace lcarev

#endif
