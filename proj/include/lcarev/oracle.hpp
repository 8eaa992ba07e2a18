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

#ifndef LCAREV_ORACLE_HPP
#define LCAREV_ORACLE_HPP

// Reference implementations used to validate the fast paths: the full
// de Bruijn style automaton over all 2^rR postfixes, and transition-matrix
// determinants.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lcarev/bitmatrix.hpp"
#include "lcarev/deadline.hpp"
#include "lcarev/report.hpp"
#include "lcarev/rule.hpp"

namespace lcarev {

inline constexpr std::size_t kDfaRightCap = 20;

/// A tuple packed into a word: bit k is tuple[k], k = 0 being the leftmost
/// cell. Bits [0, rL) are the prefix, [rL, rL + rR) the postfix.
using TupleWord = std::uint64_t;

struct Node {
    std::size_t left = 0;
    std::size_t right = 0;
    std::vector<TupleWord> tuples;  // 2^rR entries, in initial-node order

    std::size_t width() const noexcept { return left + right; }
    TupleWord postfix(std::size_t i) const { return tuples[i] >> left; }
    /// Tuple i as a '0'/'1' string, leftmost cell first.
    std::string tuple_string(std::size_t i) const;

    friend bool operator==(const Node&, const Node&) = default;
};

/// Tuple i has a zero prefix and the rR-bit binary form of i as postfix,
/// most significant bit first.
Node initial_node(std::size_t left, std::size_t right, std::size_t cap = kDfaRightCap);

/// Follows the 0-labelled edge: each tuple drops its leftmost cell and
/// appends the cell that forces the updated centre to 0.
Node next_node(const Node& node, const Rule& r);

/// All 2^rR postfixes pairwise distinct.
bool node_reversible(const Node& node);

struct DfaOptions {
    std::size_t right_cap = kDfaRightCap;
    Deadline deadline;
    /// Called with every node of the cycle, initial node first.
    std::function<void(const Node&, std::uint64_t index, bool reversible)> on_node;
};

/// Edges walked until the initial node comes back.
std::uint64_t dfa_period(const Rule& r, const DfaOptions& opts = {});
ReversibilityReport reversible_residues_dfa(const Rule& r, const DfaOptions& opts = {});

/// Entry (i, j) is lambda_{j - i}.
BitMatrix transition_matrix(const Rule& r, std::size_t n);

/// det M_n computed by elimination restricted to the band; an independent
/// route to det_gf2(transition_matrix(r, n)) that stays linear in n.
bool det_banded(const Rule& r, std::size_t n);

/// Entry n - 1 is det M_n for n = 1..n_max (dense elimination).
std::vector<bool> reversible_residues_matrix(const Rule& r, std::size_t n_max);

}  // namespace lcarev

#endif
