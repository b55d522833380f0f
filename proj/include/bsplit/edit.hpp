#pragma once

// Edit sequences: edge insertions, edge deletions, inclusive vertex splits.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsplit/graph.hpp"

namespace bsplit {

struct EditOp {
    enum class Kind { insert_edge, delete_edge, split };

    Kind kind;
    VertexId u, v;                        // endpoints; u is the split target
    std::vector<VertexId> part1, part2;   // split parts (copy-1 / copy-2 neighbors)

    static EditOp insertion(VertexId a, VertexId b) { return {Kind::insert_edge, std::move(a), std::move(b), {}, {}}; }
    static EditOp deletion(VertexId a, VertexId b) { return {Kind::delete_edge, std::move(a), std::move(b), {}, {}}; }
    static EditOp split_vertex(VertexId target, std::vector<VertexId> p1, std::vector<VertexId> p2) {
        return {Kind::split, std::move(target), {}, std::move(p1), std::move(p2)};
    }

    bool operator==(const EditOp&) const = default;
};

// Cost of a sequence is its length; a split counts 1.
using EditSequence = std::vector<EditOp>;

struct ApplyError : std::runtime_error {
    std::size_t op_index;
    ApplyError(std::size_t idx, const std::string& what)
        : std::runtime_error("op " + std::to_string(idx) + ": " + what), op_index(idx) {}
};

// Returns G^sigma. Each op must be applicable to the graph produced by the
// prefix before it; violations raise ApplyError with the op index.
inline BipartiteGraph apply(const BipartiteGraph& g, const EditSequence& seq) {
    BipartiteGraph out = g;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const EditOp& op = seq[i];
        try {
            switch (op.kind) {
                case EditOp::Kind::insert_edge: out.insert_edge(op.u, op.v); break;
                case EditOp::Kind::delete_edge: out.delete_edge(op.u, op.v); break;
                case EditOp::Kind::split: out.split(op.u, op.part1, op.part2); break;
            }
        } catch (const std::invalid_argument& e) {
            throw ApplyError(i, e.what());
        }
    }
    return out;
}

struct VerifyOutcome {
    bool ok = false;
    std::string reason;  // first violated condition when !ok
    explicit operator bool() const { return ok; }
};

// True iff sigma is applicable, |sigma| <= budget, the result is a bicluster
// graph, and (one-sided) every split targets a left-origin copy.
inline VerifyOutcome verify_solution(const BipartiteGraph& g, const EditSequence& seq, int budget, Variant variant) {
    BipartiteGraph result;
    try {
        result = apply(g, seq);
    } catch (const ApplyError& e) {
        return {false, e.what()};
    }
    if ((long long)seq.size() > budget)
        return {false, "length " + std::to_string(seq.size()) + " exceeds budget " + std::to_string(budget)};
    if (!is_bicluster(result)) return {false, "result is not a bicluster graph"};
    if (variant == Variant::one_sided) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i].kind == EditOp::Kind::split && seq[i].u.side != Side::left)
                return {false, "op " + std::to_string(i) + ": one-sided variant forbids splitting " + seq[i].u.str()};
        }
    }
    return {true, ""};
}

}  // namespace bsplit
