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

#include "lcarev/sbp.hpp"

#include "lcarev/bitmatrix.hpp"
#include "lcarev/error.hpp"

namespace lcarev {

namespace {

void require_bilateral_normalized(const Rule& r) {
    if (!r.is_bilateral() || !r.is_normalized())
        fail(ErrorCode::NotNormalized, "rule " + r.bits() + " (left " + std::to_string(r.left()) +
                                           ") is not a normalized bilateral rule");
}

BitVec feedback_mask(const Rule& r) {
    BitVec mask(r.size() - 1);
    for (std::size_t k = 0; k + 1 < r.size(); ++k) mask.set(k, r.at(k));
    return mask;
}

void check_geometry(const SubsetNode& s, const Rule& r) {
    if (s.left != r.left() || s.right != r.right())
        fail(ErrorCode::ShapeError, "subset geometry does not match the rule split");
}

void advance_with_mask(SubsetNode& s, const BitVec& mask) {
    for (auto& row : s.rows) row.shift_down_push(row.dot(mask));
    ++s.step_index;
}

// Column-vector action of one edge on a tuple.
BitMatrix tuple_transition(const Rule& r) {
    const std::size_t w = r.size() - 1;
    BitMatrix a(w, w);
    for (std::size_t k = 0; k + 1 < w; ++k) a.set(k, k + 1);
    for (std::size_t k = 0; k < w; ++k) a.set(w - 1, k, r.at(k));
    return a;
}

}  // namespace

std::string SubsetNode::row_string(std::size_t j) const {
    const std::string s = rows[j].to_string();
    return s.substr(0, left) + "|" + s.substr(left);
}

std::string SubsetNode::postfix_string(std::size_t j) const { return rows[j].to_string().substr(left); }

SubsetNode initial_subset(std::size_t left, std::size_t right) {
    if (left < 1 || right < 1) fail(ErrorCode::InvalidInput, "the subset needs rL >= 1 and rR >= 1");
    SubsetNode s{left, right, std::vector<BitVec>(right, BitVec(left + right)), 0};
    for (std::size_t j = 0; j < right; ++j) s.rows[j].set(left + right - 1 - j);
    return s;
}

SubsetNode step_subset(const SubsetNode& s, const Rule& r) {
    SubsetNode next = s;
    advance_subset(next, r);
    return next;
}

void advance_subset(SubsetNode& s, const Rule& r) {
    require_bilateral_normalized(r);
    check_geometry(s, r);
    advance_with_mask(s, feedback_mask(r));
}

std::size_t subset_rank(const SubsetNode& s) {
    BitMatrix m(s.rows.size(), s.right);
    for (std::size_t j = 0; j < s.rows.size(); ++j)
        for (std::size_t k = 0; k < s.right; ++k) m.set(j, k, s.rows[j].get(s.left + k));
    return rank_gf2(std::move(m));
}

SubsetNode jump_subset(const SubsetNode& s, const Rule& r, const Natural& steps) {
    require_bilateral_normalized(r);
    check_geometry(s, r);
    const BitMatrix power = power_gf2(tuple_transition(r), steps);
    SubsetNode out = s;
    for (auto& row : out.rows) row = power.apply(row);
    if (fits_u64(steps)) out.step_index += to_u64(steps);
    return out;
}

ReversibilityReport reversible_residues_sbp(const Rule& r, const SbpOptions& opts) {
    require_bilateral_normalized(r);
    const Natural period = rule_period(r, opts.period).period;
    if (!fits_u64(period) || to_u64(period) > opts.step_budget)
        fail(ErrorCode::StepBudgetExceeded, "period " + to_decimal(period) + " exceeds the step budget " +
                                                std::to_string(opts.step_budget) + "; use point queries");
    const std::uint64_t steps = to_u64(period);
    const BitVec mask = feedback_mask(r);
    const SubsetNode start = initial_subset(r.left(), r.right());

    SubsetNode s = start;
    std::vector<std::uint64_t> residues;
    for (std::uint64_t k = 0; k < steps; ++k) {
        opts.deadline.tick();
        const std::size_t rank = subset_rank(s);
        if (rank == r.right()) residues.push_back(kInitialNodeResidue + k);
        if (opts.on_step) opts.on_step(s, rank);
        advance_with_mask(s, mask);
    }
    if (!s.same_rows(start))
        fail(ErrorCode::CycleMismatch, "subset did not return to the initial subset after " + to_decimal(period) + " steps");
    return {period, std::move(residues), r, false};
}

bool sbp_reversible_at(const Rule& r, const Natural& n, const SbpOptions& opts, std::optional<Natural> known_period) {
    require_bilateral_normalized(r);
    if (n < 1) fail(ErrorCode::InvalidInput, "cell count must be positive");
    const Natural period = known_period ? *known_period : rule_period(r, opts.period).period;
    const Natural residue = n % period;
    SubsetNode s = initial_subset(r.left(), r.right());
    if (fits_u64(residue) && to_u64(residue) <= opts.step_budget) {
        const BitVec mask = feedback_mask(r);
        for (std::uint64_t k = to_u64(residue); k > 0; --k) {
            opts.deadline.tick();
            advance_with_mask(s, mask);
        }
    } else {
        s = jump_subset(s, r, residue);
    }
    return subset_rank(s) == r.right();
}

}  // namespace lcarev
