#pragma once

// Turns an assignment into a concrete edit sequence: deletions, then
// insertions, then binary inclusive splits routing each multi-slot class
// member so every copy keeps exactly the partners of its slots.

#include <algorithm>
#include <map>
#include <vector>

#include "bsplit/assignment.hpp"
#include "bsplit/edit.hpp"
#include "bsplit/graph.hpp"
#include "bsplit/twins.hpp"

namespace bsplit {

inline EditSequence reconstruct_witness(const BipartiteGraph& g, const CisPartition& p, const Assignment& a) {
    if ((int)a.left.size() != p.left_count || a.left.size() + a.right.size() != p.size())
        throw std::invalid_argument("assignment does not match the partition's class counts");

    auto slots_of_class = [&](int c) -> const SlotSet& {
        return c < p.left_count ? a.left[c] : a.right[c - p.left_count];
    };
    std::vector<std::uint64_t> mask(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) mask[c] = detail::slot_mask(slots_of_class((int)c), a.ell);

    auto vmask = [&](const VertexId& v) { return mask[p.class_of(v)]; };
    auto vslots = [&](const VertexId& v) -> const SlotSet& { return slots_of_class(p.class_of(v)); };

    EditSequence seq;
    // (1) deletions: adjacent pairs with no shared slot
    for (const auto& [u, v] : g.edges())
        if ((vmask(u) & vmask(v)) == 0) seq.push_back(EditOp::deletion(u, v));
    // (2) insertions: non-adjacent pairs with a shared slot
    std::vector<VertexId> lefts = g.vertices(Side::left), rights = g.vertices(Side::right);
    for (const VertexId& u : lefts)
        for (const VertexId& v : rights)
            if (!g.has_edge(u, v) && (vmask(u) & vmask(v)) != 0) seq.push_back(EditOp::insertion(u, v));

    // (3) splits; left chains first, then right chains against the left leaves
    std::map<std::pair<VertexId, int>, VertexId> left_leaf;  // (left original, slot) -> copy
    auto left_leaf_of = [&](const VertexId& x, int slot) {
        auto it = left_leaf.find({x, slot});
        return it == left_leaf.end() ? x : it->second;
    };

    for (const VertexId& u : lefts) {
        const SlotSet& s = vslots(u);
        if (s.size() < 2) continue;
        VertexId owner = u;
        for (std::size_t t = 0; t + 1 < s.size(); ++t) {
            std::uint64_t rest = 0;
            for (std::size_t x = t + 1; x < s.size(); ++x) rest |= 1ull << (s[x] - 1);
            std::vector<VertexId> part1, part2;
            for (const VertexId& w : rights) {
                std::uint64_t m = vmask(w);
                if (m & (1ull << (s[t] - 1))) part1.push_back(w);
                if (m & rest) part2.push_back(w);
            }
            seq.push_back(EditOp::split_vertex(owner, part1, part2));
            left_leaf.emplace(std::make_pair(u, s[t]), owner.child(1));
            owner = owner.child(2);
        }
        left_leaf.emplace(std::make_pair(u, s.back()), owner);
    }

    for (const VertexId& v : rights) {
        const SlotSet& s = vslots(v);
        if (s.size() < 2) continue;
        VertexId owner = v;
        for (std::size_t t = 0; t + 1 < s.size(); ++t) {
            std::uint64_t rest = 0;
            for (std::size_t x = t + 1; x < s.size(); ++x) rest |= 1ull << (s[x] - 1);
            std::vector<VertexId> part1, part2;
            for (const VertexId& x : lefts) {
                const SlotSet& xs = vslots(x);
                std::uint64_t m = vmask(x);
                if (m & (1ull << (s[t] - 1))) part1.push_back(left_leaf_of(x, s[t]));
                // after the left phase every copy of x carries one slot, so
                // each shared remaining slot contributes its own leaf
                for (int xe : xs)
                    if (rest & (1ull << (xe - 1))) part2.push_back(left_leaf_of(x, xe));
            }
            std::sort(part1.begin(), part1.end());
            std::sort(part2.begin(), part2.end());
            seq.push_back(EditOp::split_vertex(owner, part1, part2));
            owner = owner.child(2);
        }
    }
    return seq;
}

}  // namespace bsplit
