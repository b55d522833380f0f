#pragma once

// False-twin classes (critical independent sets) and the class-level
// quotient graph.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bsplit/graph.hpp"

namespace bsplit {

struct CisClass {
    Side side = Side::left;
    std::vector<VertexId> members;        // sorted
    std::vector<int> neighbor_classes;    // filled by quotient_graph
};

struct CisPartition {
    std::vector<CisClass> classes;  // left classes first, then right; each block ordered by smallest member
    int left_count = 0;

    std::size_t size() const { return classes.size(); }

    int class_of(const VertexId& v) const {
        auto it = index.find(v);
        if (it == index.end()) throw std::invalid_argument("vertex not in partition: " + v.str());
        return it->second;
    }

    std::unordered_map<VertexId, int, VertexIdHash> index;
};

namespace detail {

inline std::uint64_t neighborhood_hash(const std::vector<VertexId>& nbs) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 0x100000001b3ull;
    };
    for (const VertexId& v : nbs) {
        mix(std::uint64_t(v.origin) * 2 + std::uint64_t(v.side));
        for (std::uint8_t b : v.path) mix(0x80ull | b);
        mix(0xffull);
    }
    return h;
}

}  // namespace detail

// Partition of the live vertices into maximal same-side classes with
// identical neighborhoods. Vertices with empty neighborhoods on opposite
// sides land in different classes. Expected O(n + m) via neighborhood
// hashing; hash collisions fall back to exact comparison within buckets.
inline CisPartition critical_independent_sets(const BipartiteGraph& g) {
    CisPartition part;
    for (Side side : {Side::left, Side::right}) {
        std::unordered_map<std::uint64_t, std::vector<int>> buckets;  // hash -> class indices (this side)
        std::vector<std::vector<VertexId>> members;
        std::vector<std::vector<VertexId>> signatures;
        for (const VertexId& v : g.vertices(side)) {
            std::vector<VertexId> nbs = g.neighbors(v);
            std::uint64_t h = detail::neighborhood_hash(nbs);
            int found = -1;
            for (int c : buckets[h]) {
                if (signatures[c] == nbs) {
                    found = c;
                    break;
                }
            }
            if (found < 0) {
                found = (int)members.size();
                members.emplace_back();
                signatures.push_back(std::move(nbs));
                buckets[h].push_back(found);
            }
            members[found].push_back(v);
        }
        // vertices(side) is sorted, so members are sorted and the first
        // member is the smallest; order classes by it.
        std::vector<int> order(members.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return members[a].front() < members[b].front(); });
        for (int c : order) part.classes.push_back(CisClass{side, std::move(members[c]), {}});
        if (side == Side::left) part.left_count = (int)part.classes.size();
    }
    for (int c = 0; c < (int)part.classes.size(); ++c)
        for (const VertexId& v : part.classes[c].members) part.index.emplace(v, c);
    return part;
}

struct QuotientGraph {
    struct Node {
        Side side = Side::left;
        int weight = 0;  // class size
    };

    std::vector<Node> nodes;             // aligned with partition class indices
    int left_count = 0;
    std::vector<std::vector<int>> adj;   // sorted neighbor node indices
    long long edge_count = 0;

    bool adjacent(int a, int b) const {
        if (nodes[a].side == nodes[b].side) return false;
        int l = nodes[a].side == Side::left ? a : b;
        int r = nodes[a].side == Side::left ? b : a;
        return edge_keys_.count((std::uint64_t(l) << 32) | std::uint64_t(r)) > 0;
    }

    void add_quotient_edge(int l, int r) {
        if (edge_keys_.insert((std::uint64_t(l) << 32) | std::uint64_t(r)).second) {
            adj[l].push_back(r);
            adj[r].push_back(l);
            ++edge_count;
        }
    }

  private:
    std::unordered_set<std::uint64_t> edge_keys_;
};

// Builds the quotient graph over a twin partition: one node per class,
// weight = class size, edge iff the classes are fully adjacent (by
// twin-ness, iff any one cross pair is an edge). Fills P's neighbor_classes.
// Rejects partitions that do not partition G's live vertex set.
inline QuotientGraph quotient_graph(const BipartiteGraph& g, CisPartition& p) {
    std::unordered_map<VertexId, int, VertexIdHash> cls;
    for (int c = 0; c < (int)p.classes.size(); ++c) {
        const CisClass& cc = p.classes[c];
        if (cc.members.empty()) throw std::invalid_argument("quotient_graph: empty class");
        for (const VertexId& v : cc.members) {
            if (v.side != cc.side) throw std::invalid_argument("quotient_graph: member on wrong side: " + v.str());
            if (!g.has_vertex(v)) throw std::invalid_argument("quotient_graph: member not in graph: " + v.str());
            if (!cls.emplace(v, c).second)
                throw std::invalid_argument("quotient_graph: vertex in two classes: " + v.str());
        }
    }
    if ((long long)cls.size() != g.total_count())
        throw std::invalid_argument("quotient_graph: partition does not cover the vertex set");

    QuotientGraph q;
    q.left_count = p.left_count;
    q.nodes.resize(p.classes.size());
    q.adj.resize(p.classes.size());
    for (std::size_t c = 0; c < p.classes.size(); ++c)
        q.nodes[c] = {p.classes[c].side, (int)p.classes[c].members.size()};
    for (const auto& [u, v] : g.edges()) q.add_quotient_edge(cls.at(u), cls.at(v));
    for (auto& a : q.adj) std::sort(a.begin(), a.end());
    for (std::size_t c = 0; c < p.classes.size(); ++c) p.classes[c].neighbor_classes = q.adj[c];
    p.index = std::move(cls);
    return q;
}

}  // namespace bsplit
