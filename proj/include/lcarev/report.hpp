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

#ifndef LCAREV_REPORT_HPP
#define LCAREV_REPORT_HPP

#include <cstdint>
#include <vector>

#include "lcarev/natural.hpp"
#include "lcarev/rule.hpp"

namespace lcarev {

/// The node reached after j edges from the initial node describes cell
/// counts n == j (mod period); the initial node is residue 0. Shared by the
/// DFA oracle and the standard-basis-postfix traversal.
inline constexpr std::uint64_t kInitialNodeResidue = 0;

/// An n-cell automaton is reversible iff n mod period is listed.
struct ReversibilityReport {
    Natural period;
    std::vector<std::uint64_t> residues;  // increasing
    Rule rule;                            // normalized, with its split
    bool unilateral = false;

    bool reversible_at(const Natural& n) const;
    friend bool operator==(const ReversibilityReport&, const ReversibilityReport&) = default;
};

}  // namespace lcarev

#endif
