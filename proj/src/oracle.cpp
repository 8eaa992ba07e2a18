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

#include "lcarev/oracle.hpp"

#include <bit>
#include <deque>

#include "lcarev/error.hpp"

namespace lcarev {

namespace {

void require_bilateral_normalized(const Rule& r) {
    if (!r.is_bilateral() || !r.is_normalized())
        fail(ErrorCode::NotNormalized, "rule " + r.bits() + " (left " + std::to_string(r.left()) +
                                           ") is not a normalized bilateral rule");
}

// Bit k set iff lambda_{k - rL} = 1, for k < rL + rR (lambda_rR excluded).
TupleWord feedback_mask(const Rule& r) {
    TupleWord mask = 0;
    for (std::size_t k = 0; k + 1 < r.size(); ++k)
        if (r.at(k)) mask |= TupleWord{1} << k;
    return mask;
}

void check_widths(std::size_t left, std::size_t right, std::size_t cap) {
    if (right > cap) fail(ErrorCode::CapExceeded, "DFA needs rR <= " + std::to_string(cap));
    if (left + right > 64) fail(ErrorCode::CapExceeded, "DFA tuples are limited to 64 cells");
}

}  // namespace

std::string Node::tuple_string(std::size_t i) const {
    std::string s(width(), '0');
    for (std::size_t k = 0; k < width(); ++k)
        if ((tuples[i] >> k) & 1u) s[k] = '1';
    return s;
}

Node initial_node(std::size_t left, std::size_t right, std::size_t cap) {
    if (left < 1 || right < 1) fail(ErrorCode::InvalidInput, "the automaton needs rL >= 1 and rR >= 1");
    check_widths(left, right, cap);
    Node node{left, right, std::vector<TupleWord>(std::size_t{1} << right)};
    for (std::size_t i = 0; i < node.tuples.size(); ++i) {
        TupleWord t = 0;
        // Postfix character k (k = 0 leftmost) is bit rR-1-k of i.
        for (std::size_t k = 0; k < right; ++k)
            if ((i >> (right - 1 - k)) & 1u) t |= TupleWord{1} << (left + k);
        node.tuples[i] = t;
    }
    return node;
}

Node next_node(const Node& node, const Rule& r) {
    require_bilateral_normalized(r);
    if (r.left() != node.left || r.right() != node.right)
        fail(ErrorCode::ShapeError, "node geometry does not match the rule split");
    const TupleWord mask = feedback_mask(r);
    const std::size_t top = node.width() - 1;
    Node next{node.left, node.right, std::vector<TupleWord>(node.tuples.size())};
    for (std::size_t i = 0; i < node.tuples.size(); ++i) {
        const TupleWord t = node.tuples[i];
        const TupleWord b = static_cast<TupleWord>(std::popcount(t & mask) & 1);
        next.tuples[i] = (t >> 1) | (b << top);
    }
    return next;
}

bool node_reversible(const Node& node) {
    std::vector<bool> seen(std::size_t{1} << node.right, false);
    for (std::size_t i = 0; i < node.tuples.size(); ++i) {
        const auto p = static_cast<std::size_t>(node.postfix(i));
        if (seen[p]) return false;
        seen[p] = true;
    }
    return true;
}

namespace {

// Walks the cycle once, calling visit(node, index) for every node before
// stepping. Returns the cycle length.
template <typename Visit>
std::uint64_t walk_cycle(const Rule& r, const DfaOptions& opts, Visit&& visit) {
    require_bilateral_normalized(r);
    const Node start = initial_node(r.left(), r.right(), opts.right_cap);
    Node node = start;
    std::uint64_t steps = 0;
    do {
        opts.deadline.check();
        if (node.tuples[0] != 0) fail(ErrorCode::CycleMismatch, "tuple 0 left the all-zero state");
        visit(node, steps);
        node = next_node(node, r);
        ++steps;
    } while (node != start);
    return steps;
}

}  // namespace

std::uint64_t dfa_period(const Rule& r, const DfaOptions& opts) {
    return walk_cycle(r, opts, [&](const Node& node, std::uint64_t index) {
        if (opts.on_node) opts.on_node(node, index, node_reversible(node));
    });
}

ReversibilityReport reversible_residues_dfa(const Rule& r, const DfaOptions& opts) {
    std::vector<std::uint64_t> residues;
    const std::uint64_t period = walk_cycle(r, opts, [&](const Node& node, std::uint64_t index) {
        const bool rev = node_reversible(node);
        if (rev) residues.push_back(kInitialNodeResidue + index);
        if (opts.on_node) opts.on_node(node, index, rev);
    });
    return {from_u64(period), std::move(residues), r, false};
}

BitMatrix transition_matrix(const Rule& r, std::size_t n) {
    BitMatrix m(n, n);
    const long rl = static_cast<long>(r.left()), rr = static_cast<long>(r.right());
    for (std::size_t i = 0; i < n; ++i) {
        for (long off = -rl; off <= rr; ++off) {
            const long j = static_cast<long>(i) + off;
            if (j < 0 || j >= static_cast<long>(n)) continue;
            if (r.lambda(off)) m.set(i, static_cast<std::size_t>(j));
        }
    }
    return m;
}

bool det_banded(const Rule& r, std::size_t n) {
    if (n == 0) return true;
    if (r.size() > 64) return det_gf2(transition_matrix(r, n));
    const std::size_t rl = r.left();

    // Row i restricted to columns >= c, aligned so bit 0 is column c.
    auto original_row = [&](std::size_t i, std::size_t c) {
        std::uint64_t w = 0;
        for (std::size_t k = 0; k < r.size(); ++k) {
            const long col = static_cast<long>(i) - static_cast<long>(rl) + static_cast<long>(k);
            if (col < static_cast<long>(c) || col >= static_cast<long>(n)) continue;
            if (r.at(k)) w |= std::uint64_t{1} << (static_cast<std::size_t>(col) - c);
        }
        return w;
    };

    std::deque<std::uint64_t> window;
    for (std::size_t i = 0; i <= rl && i < n; ++i) window.push_back(original_row(i, 0));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = 0;
        while (piv < window.size() && !(window[piv] & 1u)) ++piv;
        if (piv == window.size()) return false;
        std::swap(window[0], window[piv]);
        for (std::size_t k = 1; k < window.size(); ++k)
            if (window[k] & 1u) window[k] ^= window[0];
        window.pop_front();
        for (auto& w : window) w >>= 1;
        const std::size_t incoming = c + rl + 1;
        if (incoming < n) window.push_back(original_row(incoming, c + 1));
    }
    return true;
}

std::vector<bool> reversible_residues_matrix(const Rule& r, std::size_t n_max) {
    std::vector<bool> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) out.push_back(det_gf2(transition_matrix(r, n)));
    return out;
}

}  // namespace lcarev
