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

#ifndef LCAREV_SBP_HPP
#define LCAREV_SBP_HPP

// Standard-basis-postfix traversal. Only the rR tuples whose initial
// postfixes are unit vectors are followed around the cycle; every other
// tuple is a fixed linear combination of them, so the node is reversible
// exactly when their postfixes are linearly independent.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lcarev/bitvec.hpp"
#include "lcarev/deadline.hpp"
#include "lcarev/period.hpp"
#include "lcarev/report.hpp"
#include "lcarev/rule.hpp"

namespace lcarev {

/// Row j is the image of the tuple whose initial postfix is the j-th
/// standard basis vector (postfix value 2^j, most significant bit first).
/// Row bit k is tuple[k]; bits [0, rL) prefix, [rL, rL + rR) postfix.
struct SubsetNode {
    std::size_t left = 0;
    std::size_t right = 0;
    std::vector<BitVec> rows;
    std::uint64_t step_index = 0;

    std::size_t width() const noexcept { return left + right; }
    /// Row j as prefix|postfix characters, leftmost cell first.
    std::string row_string(std::size_t j) const;
    std::string postfix_string(std::size_t j) const;

    /// Compares geometry and rows, not the step counter.
    bool same_rows(const SubsetNode& o) const { return left == o.left && right == o.right && rows == o.rows; }
};

SubsetNode initial_subset(std::size_t left, std::size_t right);
SubsetNode step_subset(const SubsetNode& s, const Rule& r);
/// In-place variant of step_subset.
void advance_subset(SubsetNode& s, const Rule& r);
/// Rank over GF(2) of the rR x rR postfix matrix.
std::size_t subset_rank(const SubsetNode& s);

/// Moves the subset forward by `steps` edges at once through a power of the
/// tuple transition matrix; agrees with repeated advance_subset.
SubsetNode jump_subset(const SubsetNode& s, const Rule& r, const Natural& steps);

inline constexpr std::uint64_t kDefaultStepBudget = std::uint64_t{1} << 24;

struct SbpOptions {
    PeriodOptions period;
    /// Full traversals refuse periods above this; point queries walk up to
    /// this many steps and jump beyond it.
    std::uint64_t step_budget = kDefaultStepBudget;
    Deadline deadline;
    /// Called at every step of a full traversal with the rank at that step.
    std::function<void(const SubsetNode&, std::size_t rank)> on_step;
};

/// Reversible residues of a normalized bilateral rule over one period.
ReversibilityReport reversible_residues_sbp(const Rule& r, const SbpOptions& opts = {});

/// Whether the n-cell automaton is reversible, from the subset at residue
/// n mod period. A period may be supplied when already known.
bool sbp_reversible_at(const Rule& r, const Natural& n, const SbpOptions& opts = {},
                       std::optional<Natural> known_period = std::nullopt);

}  // namespace lcarev

#endif
