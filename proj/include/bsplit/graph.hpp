#pragma once

// Side-tagged bipartite graph with copy provenance.
//
// Vertices are identified by (side, origin, copy path). Originals have an
// empty path; splitting a vertex consumes it and produces the two children
// path+1 and path+2, so live ids are never prefixes of each other.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace bsplit {

enum class Side : std::uint8_t { left = 0, right = 1 };

inline Side other_side(Side s) { return s == Side::left ? Side::right : Side::left; }

enum class Variant { two_sided, one_sided };

enum class Decision { yes, no };

struct VertexId {
    Side side = Side::left;
    int origin = 0;                  // 1-based within its side
    std::vector<std::uint8_t> path;  // split lineage, entries in {1,2}

    bool is_original() const { return path.empty(); }

    VertexId child(std::uint8_t branch) const {
        assert(branch == 1 || branch == 2);
        VertexId c{side, origin, path};
        c.path.push_back(branch);
        return c;
    }

    // Token form used in witness files: L3, R2, L3.1.2, ...
    std::string str() const {
        std::string s(side == Side::left ? "L" : "R");
        s += std::to_string(origin);
        for (std::uint8_t b : path) {
            s += '.';
            s += std::to_string(int(b));
        }
        return s;
    }

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct VertexIdHash {
    std::size_t operator()(const VertexId& v) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (std::uint64_t(v.origin) << 2 | std::uint64_t(v.side));
        for (std::uint8_t b : v.path) {
            h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return std::size_t(h);
    }
};

class BipartiteGraph {
  public:
    BipartiteGraph() = default;

    // Originals L1..Ln_left and R1..Rn_right, no edges.
    BipartiteGraph(int n_left, int n_right) {
        if (n_left < 0 || n_right < 0) throw std::invalid_argument("negative vertex count");
        for (int i = 1; i <= n_left; ++i) push_vertex({Side::left, i, {}});
        for (int i = 1; i <= n_right; ++i) push_vertex({Side::right, i, {}});
    }

    // Builder for original-vertex edges (1-based origins).
    void add_edge(int left_origin, int right_origin) {
        insert_edge({Side::left, left_origin, {}}, {Side::right, right_origin, {}});
    }

    bool has_vertex(const VertexId& v) const {
        auto idx = find_slot(v);
        return idx.has_value();
    }

    int count(Side s) const { return live_count_[int(s)]; }
    int total_count() const { return live_count_[0] + live_count_[1]; }
    long long edge_count() const { return (long long)edge_keys_.size(); }

    std::vector<VertexId> vertices(Side s) const {
        std::vector<VertexId> out;
        out.reserve(live_count_[int(s)]);
        for (const Slot& sl : slots_[int(s)])
            if (sl.live) out.push_back(sl.id);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool has_edge(const VertexId& u, const VertexId& v) const {
        if (u.side == v.side) return false;
        const VertexId& l = u.side == Side::left ? u : v;
        const VertexId& r = u.side == Side::left ? v : u;
        auto li = find_slot(l), ri = find_slot(r);
        if (!li || !ri) return false;
        return edge_keys_.count(pack(*li, *ri)) > 0;
    }

    std::vector<VertexId> neighbors(const VertexId& v) const {
        std::uint32_t idx = require_live(v);
        const Slot& sl = slots_[int(v.side)][idx];
        std::vector<VertexId> out;
        out.reserve(sl.adj.size());
        for (std::uint32_t w : sl.adj) out.push_back(slots_[int(other_side(v.side))][w].id);
        std::sort(out.begin(), out.end());
        return out;
    }

    int degree(const VertexId& v) const {
        std::uint32_t idx = require_live(v);
        return (int)slots_[int(v.side)][idx].adj.size();
    }

    // All edges as (left id, right id), sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        out.reserve(edge_keys_.size());
        for (const Slot& sl : slots_[0]) {
            if (!sl.live) continue;
            for (std::uint32_t w : sl.adj) out.emplace_back(sl.id, slots_[1][w].id);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void insert_edge(const VertexId& u, const VertexId& v) {
        auto [li, ri] = require_cross(u, v);
        if (!edge_keys_.insert(pack(li, ri)).second) throw std::invalid_argument("edge already present: " + edge_str(u, v));
        slots_[0][li].adj.push_back(ri);
        slots_[1][ri].adj.push_back(li);
    }

    void delete_edge(const VertexId& u, const VertexId& v) {
        auto [li, ri] = require_cross(u, v);
        if (edge_keys_.erase(pack(li, ri)) == 0) throw std::invalid_argument("edge not present: " + edge_str(u, v));
        drop(slots_[0][li].adj, ri);
        drop(slots_[1][ri].adj, li);
    }

    // Inclusive split: replaces v by v.1 (neighborhood part1) and v.2
    // (neighborhood part2). part1 and part2 may overlap and must cover N(v);
    // either may be empty. Returns the two copies.
    std::pair<VertexId, VertexId> split(const VertexId& v, const std::vector<VertexId>& part1,
                                        const std::vector<VertexId>& part2) {
        std::uint32_t vi = require_live(v);
        int os = int(other_side(v.side));
        std::unordered_set<std::uint32_t> nb;
        for (std::uint32_t w : slots_[int(v.side)][vi].adj) nb.insert(w);
        auto resolve_part = [&](const std::vector<VertexId>& part) {
            std::vector<std::uint32_t> out;
            std::unordered_set<std::uint32_t> seen;
            for (const VertexId& w : part) {
                if (w.side == v.side) throw std::invalid_argument("split part contains same-side vertex " + w.str());
                auto wi = find_slot(w);
                if (!wi || !slots_[os][*wi].live) throw std::invalid_argument("split part contains dead vertex " + w.str());
                if (!nb.count(*wi)) throw std::invalid_argument("split part contains non-neighbor " + w.str());
                if (seen.insert(*wi).second) out.push_back(*wi);
            }
            return out;
        };
        std::vector<std::uint32_t> p1 = resolve_part(part1), p2 = resolve_part(part2);
        std::unordered_set<std::uint32_t> covered(p1.begin(), p1.end());
        covered.insert(p2.begin(), p2.end());
        if (covered.size() != nb.size())
            throw std::invalid_argument("split parts do not cover the neighborhood of " + v.str());

        VertexId c1 = v.child(1), c2 = v.child(2);
        // detach v
        for (std::uint32_t w : slots_[int(v.side)][vi].adj) {
            edge_keys_.erase(v.side == Side::left ? pack(vi, w) : pack(w, vi));
            drop(slots_[os][w].adj, vi);
        }
        slots_[int(v.side)][vi].adj.clear();
        kill(v, vi);
        // attach copies
        std::uint32_t i1 = push_vertex(c1), i2 = push_vertex(c2);
        attach(i1, p1, c1.side);
        attach(i2, p2, c2.side);
        return {c1, c2};
    }

    void remove_vertex(const VertexId& v) {
        std::uint32_t vi = require_live(v);
        int os = int(other_side(v.side));
        for (std::uint32_t w : slots_[int(v.side)][vi].adj) {
            edge_keys_.erase(v.side == Side::left ? pack(vi, w) : pack(w, vi));
            drop(slots_[os][w].adj, vi);
        }
        slots_[int(v.side)][vi].adj.clear();
        kill(v, vi);
    }

    // Subgraph induced by `keep` (ids preserved; edges between kept vertices).
    BipartiteGraph induced_subgraph(const std::vector<VertexId>& keep) const {
        BipartiteGraph g;
        for (const VertexId& v : keep) {
            if (!is_live(v)) throw std::invalid_argument("induced_subgraph: vertex not live: " + v.str());
            g.push_vertex(v);
        }
        for (const auto& [u, v] : edges())
            if (g.find_slot(u) && g.find_slot(v)) g.insert_edge(u, v);
        return g;
    }

    bool operator==(const BipartiteGraph& o) const {
        return vertices(Side::left) == o.vertices(Side::left) && vertices(Side::right) == o.vertices(Side::right) &&
               edges() == o.edges();
    }

  private:
    struct Slot {
        VertexId id;
        bool live = true;
        std::vector<std::uint32_t> adj;  // slot indices on the other side
    };

    std::vector<Slot> slots_[2];
    std::unordered_map<VertexId, std::uint32_t, VertexIdHash> index_[2];
    std::unordered_set<std::uint64_t> edge_keys_;  // pack(left slot, right slot)
    int live_count_[2] = {0, 0};

    static std::uint64_t pack(std::uint32_t l, std::uint32_t r) { return (std::uint64_t(l) << 32) | r; }

    static void drop(std::vector<std::uint32_t>& v, std::uint32_t x) {
        auto it = std::find(v.begin(), v.end(), x);
        assert(it != v.end());
        v.erase(it);
    }

    static std::string edge_str(const VertexId& u, const VertexId& v) { return u.str() + "-" + v.str(); }

    std::uint32_t push_vertex(const VertexId& v) {
        int s = int(v.side);
        if (index_[s].count(v)) throw std::invalid_argument("duplicate vertex " + v.str());
        std::uint32_t idx = (std::uint32_t)slots_[s].size();
        slots_[s].push_back(Slot{v, true, {}});
        index_[s].emplace(v, idx);
        ++live_count_[s];
        return idx;
    }

    void kill(const VertexId& v, std::uint32_t idx) {
        slots_[int(v.side)][idx].live = false;
        index_[int(v.side)].erase(v);
        --live_count_[int(v.side)];
    }

    void attach(std::uint32_t idx, const std::vector<std::uint32_t>& nbs, Side s) {
        for (std::uint32_t w : nbs) {
            slots_[int(s)][idx].adj.push_back(w);
            slots_[int(other_side(s))][w].adj.push_back(idx);
            edge_keys_.insert(s == Side::left ? pack(idx, w) : pack(w, idx));
        }
    }

    std::optional<std::uint32_t> find_slot(const VertexId& v) const {
        auto it = index_[int(v.side)].find(v);
        if (it == index_[int(v.side)].end()) return std::nullopt;
        return it->second;
    }

    bool is_live(const VertexId& v) const {
        auto idx = find_slot(v);
        return idx && slots_[int(v.side)][*idx].live;
    }

    std::uint32_t require_live(const VertexId& v) const {
        auto idx = find_slot(v);
        if (!idx || !slots_[int(v.side)][*idx].live) throw std::invalid_argument("vertex not live: " + v.str());
        return *idx;
    }

    std::pair<std::uint32_t, std::uint32_t> require_cross(const VertexId& u, const VertexId& v) const {
        if (u.side == v.side) throw std::invalid_argument("endpoints on the same side: " + edge_str(u, v));
        const VertexId& l = u.side == Side::left ? u : v;
        const VertexId& r = u.side == Side::left ? v : u;
        return {require_live(l), require_live(r)};
    }
};

// Renumbers original vertices contiguously (order-preserving per side).
// left_ids[i] / right_ids[i] give the previous origin of new origin i+1.
struct CompactResult {
    BipartiteGraph graph;
    std::vector<int> left_ids, right_ids;
};

inline CompactResult compact_originals(const BipartiteGraph& g) {
    CompactResult res;
    std::vector<VertexId> lefts = g.vertices(Side::left), rights = g.vertices(Side::right);
    std::unordered_map<VertexId, int, VertexIdHash> renum;
    for (const VertexId& v : lefts) {
        if (!v.is_original()) throw std::invalid_argument("cannot renumber split copies");
        res.left_ids.push_back(v.origin);
        renum.emplace(v, (int)res.left_ids.size());
    }
    for (const VertexId& v : rights) {
        if (!v.is_original()) throw std::invalid_argument("cannot renumber split copies");
        res.right_ids.push_back(v.origin);
        renum.emplace(v, (int)res.right_ids.size());
    }
    res.graph = BipartiteGraph((int)lefts.size(), (int)rights.size());
    for (const auto& [u, v] : g.edges()) res.graph.add_edge(renum.at(u), renum.at(v));
    return res;
}

// True iff every connected component is a complete bipartite graph
// (components with one empty side, i.e. isolated vertices, qualify).
inline bool is_bicluster(const BipartiteGraph& g) {
    std::unordered_map<VertexId, int, VertexIdHash> comp;
    std::vector<VertexId> lefts = g.vertices(Side::left), rights = g.vertices(Side::right);
    std::vector<VertexId> all(lefts);
    all.insert(all.end(), rights.begin(), rights.end());
    int ncomp = 0;
    std::vector<std::vector<VertexId>> members;
    for (const VertexId& s : all) {
        if (comp.count(s)) continue;
        members.emplace_back();
        std::vector<VertexId> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            members[ncomp].push_back(v);
            for (const VertexId& w : g.neighbors(v)) {
                if (!comp.count(w)) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    for (const auto& ms : members) {
        int nl = 0, nr = 0;
        for (const VertexId& v : ms) (v.side == Side::left ? nl : nr)++;
        for (const VertexId& v : ms) {
            int expect = v.side == Side::left ? nr : nl;
            if (g.degree(v) != expect) return false;
        }
    }
    return true;
}

}  // namespace bsplit
