#pragma once

// Ground-truth brute forces, deliberately independent of the solver:
//  - bfs_oracle: breadth-first search over graphs reachable by <= k edit
//    ops, deduplicating states by a canonical side-respecting labeling.
//  - assignment_oracle: exhaustive per-vertex cluster memberships with the
//    closed-form cost (no twin classes, no quotient).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bsplit/edit.hpp"
#include "bsplit/graph.hpp"

namespace bsplit {

struct OracleResult {
    Decision decision = Decision::no;
    std::optional<int> opt_cost;  // present iff decision == yes; else only "> budget" is known
};

namespace detail {

// Canonical key of a graph under side-respecting isomorphism: iterative
// neighborhood-color refinement, then the lexicographically smallest
// adjacency bitstring over the remaining within-cell orderings. Twins
// (identical neighborhoods) are interchangeable and collapse the
// permutation space, so uniform cells cost nothing.
inline std::string canonical_graph_key(const BipartiteGraph& g) {
    std::vector<VertexId> lefts = g.vertices(Side::left), rights = g.vertices(Side::right);
    int a = (int)lefts.size(), b = (int)rights.size(), n = a + b;
    std::unordered_map<VertexId, int, VertexIdHash> idx;
    for (int i = 0; i < a; ++i) idx.emplace(lefts[i], i);
    for (int j = 0; j < b; ++j) idx.emplace(rights[j], a + j);
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < a; ++i) {
        for (const VertexId& w : g.neighbors(lefts[i])) {
            int wj = idx.at(w);
            adj[i].push_back(wj);
            adj[wj].push_back(i);
        }
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());

    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = v < a ? 0 : 1;
    int ncolors = n > 0 ? 2 : 0;
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            for (int w : adj[v]) s.push_back(color[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::vector<int>> keys;
        keys.reserve(n);
        for (auto& [s, v] : sig) keys.push_back(s);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (int v = 0; v < n; ++v)
            color[v] = (int)(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
        if ((int)keys.size() == ncolors) break;
        ncolors = (int)keys.size();
    }

    // cells in color order; within a cell, group twins
    std::vector<std::vector<int>> cells(ncolors);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    struct Cell {
        std::vector<std::vector<int>> groups;  // twin groups
        std::vector<int> arrangement;          // current group-id sequence
    };
    std::vector<Cell> cell_data;
    for (auto& members : cells) {
        if (members.empty()) continue;
        Cell c;
        for (int v : members) {
            bool placed = false;
            for (auto& grp : c.groups)
                if (adj[grp.front()] == adj[v]) {
                    grp.push_back(v);
                    placed = true;
                    break;
                }
            if (!placed) c.groups.push_back({v});
        }
        for (int gi = 0; gi < (int)c.groups.size(); ++gi)
            for (std::size_t t = 0; t < c.groups[gi].size(); ++t) c.arrangement.push_back(gi);
        cell_data.push_back(std::move(c));
    }

    std::vector<std::uint64_t> best_bits;
    bool have_best = false;
    std::vector<int> lab_left, lab_right;
    auto evaluate = [&]() {
        lab_left.clear();
        lab_right.clear();
        for (const Cell& c : cell_data) {
            std::vector<std::size_t> cursor(c.groups.size(), 0);
            for (int gid : c.arrangement) {
                int v = c.groups[gid][cursor[gid]++];
                (v < a ? lab_left : lab_right).push_back(v);
            }
        }
        std::vector<std::uint64_t> bits((std::size_t(a) * b + 63) / 64 + 1, 0);
        std::size_t bit = 0;
        for (int li : lab_left) {
            for (int rj : lab_right) {
                if (std::binary_search(adj[li].begin(), adj[li].end(), rj)) bits[bit / 64] |= 1ull << (bit % 64);
                ++bit;
            }
        }
        if (!have_best || bits < best_bits) {
            best_bits = std::move(bits);
            have_best = true;
        }
    };

    // odometer over per-cell distinct arrangements
    std::function<void(std::size_t)> iterate = [&](std::size_t ci) {
        if (ci == cell_data.size()) {
            evaluate();
            return;
        }
        Cell& c = cell_data[ci];
        std::vector<int> arr = c.arrangement;  // sorted ascending = first permutation
        do {
            c.arrangement = arr;
            iterate(ci + 1);
        } while (std::next_permutation(arr.begin(), arr.end()));
    };
    iterate(0);

    std::string key;
    key.push_back(char(a));
    key.push_back(char(b));
    for (std::uint64_t w : best_bits)
        for (int t = 0; t < 8; ++t) key.push_back(char((w >> (8 * t)) & 0xff));
    return key;
}

}  // namespace detail

struct BfsOptions {
    bool force = false;
    bool prune_inverse_pairs = true;  // skip re-inserting a deleted pair and vice versa (same path)
};

// Raw edit-sequence search: explores edge insertions, edge deletions, and
// all inclusive splits with two non-empty parts (a split with an empty part
// only adds an isolated copy, so dropping it never hurts a solution).
inline OracleResult bfs_oracle(const BipartiteGraph& g, int k, Variant variant, const BfsOptions& opt = {}) {
    if (k < 0) throw std::invalid_argument("bfs_oracle: negative budget");
    if (!opt.force && (g.total_count() > 8 || k > 3))
        throw std::invalid_argument("bfs_oracle guard: intended for |V| <= 8 and k <= 3; set force to override");
    if (is_bicluster(g)) return {Decision::yes, 0};

    using Pair = std::pair<VertexId, VertexId>;
    struct State {
        BipartiteGraph graph;
        std::vector<Pair> inserted, deleted;  // per-path history for inverse pruning
    };
    auto contains = [](const std::vector<Pair>& v, const Pair& p) {
        return std::find(v.begin(), v.end(), p) != v.end();
    };

    std::unordered_set<std::string> seen{detail::canonical_graph_key(g)};
    std::vector<State> frontier{{g, {}, {}}};
    for (int level = 1; level <= k; ++level) {
        std::vector<State> next;
        bool last_level = level == k;
        for (const State& st : frontier) {
            auto consider = [&](BipartiteGraph&& g2, std::vector<Pair> ins, std::vector<Pair> del) {
                std::string key = detail::canonical_graph_key(g2);
                if (!seen.insert(key).second) return false;
                if (is_bicluster(g2)) return true;
                if (!last_level) next.push_back({std::move(g2), std::move(ins), std::move(del)});
                return false;
            };

            std::vector<VertexId> lefts = st.graph.vertices(Side::left);
            std::vector<VertexId> rights = st.graph.vertices(Side::right);
            for (const VertexId& u : lefts) {
                for (const VertexId& v : rights) {
                    Pair pr{u, v};
                    if (st.graph.has_edge(u, v)) {
                        if (opt.prune_inverse_pairs && contains(st.inserted, pr)) continue;
                        BipartiteGraph g2 = st.graph;
                        g2.delete_edge(u, v);
                        auto del = st.deleted;
                        del.push_back(pr);
                        if (consider(std::move(g2), st.inserted, std::move(del)))
                            return {Decision::yes, level};
                    } else {
                        if (opt.prune_inverse_pairs && contains(st.deleted, pr)) continue;
                        BipartiteGraph g2 = st.graph;
                        g2.insert_edge(u, v);
                        auto ins = st.inserted;
                        ins.push_back(pr);
                        if (consider(std::move(g2), std::move(ins), st.deleted))
                            return {Decision::yes, level};
                    }
                }
            }
            std::vector<VertexId> split_targets = lefts;
            if (variant == Variant::two_sided) split_targets.insert(split_targets.end(), rights.begin(), rights.end());
            for (const VertexId& v : split_targets) {
                std::vector<VertexId> nb = st.graph.neighbors(v);
                int d = (int)nb.size();
                if (d == 0) continue;
                // tags per neighbor: 0 = part1, 1 = part2, 2 = both; the first
                // neighbor stays in part1 (part order is symmetric)
                long long combos = 2;
                for (int t = 1; t < d; ++t) combos *= 3;
                for (long long code = 0; code < combos; ++code) {
                    long long c = code;
                    std::vector<VertexId> p1, p2;
                    bool p2_empty = true;
                    int first = (int)(c % 2);
                    c /= 2;
                    p1.push_back(nb[0]);
                    if (first == 1) {
                        p2.push_back(nb[0]);
                        p2_empty = false;
                    }
                    for (int t = 1; t < d; ++t) {
                        int tag = (int)(c % 3);
                        c /= 3;
                        if (tag == 0 || tag == 2) p1.push_back(nb[t]);
                        if (tag == 1 || tag == 2) {
                            p2.push_back(nb[t]);
                            p2_empty = false;
                        }
                    }
                    if (p2_empty) continue;
                    BipartiteGraph g2 = st.graph;
                    g2.split(v, p1, p2);
                    if (consider(std::move(g2), st.inserted, st.deleted))
                        return {Decision::yes, level};
                }
            }
        }
        frontier = std::move(next);
    }
    return {Decision::no, std::nullopt};
}

struct AssignmentOracleOptions {
    bool force = false;
    bool allow_splits = true;  // false: singleton memberships only (plain bicluster editing)
};

// Exhaustive per-vertex memberships over first-use-canonical cluster
// indices; cost = sum(|S(v)|-1) + mismatched adjacent pairs + mismatched
// non-adjacent pairs. Right vertices are singletons under one_sided.
inline OracleResult assignment_oracle(const BipartiteGraph& g, int k, Variant variant,
                                      const AssignmentOracleOptions& opt = {}) {
    if (k < 0) throw std::invalid_argument("assignment_oracle: negative budget");
    if (!opt.force && g.total_count() > 14)
        throw std::invalid_argument("assignment_oracle guard: intended for |V| <= 14; set force to override");

    std::vector<VertexId> lefts = g.vertices(Side::left), rights = g.vertices(Side::right);
    int a = (int)lefts.size(), b = (int)rights.size();
    int ell = std::min(a + b, 64);
    if (b > 64) throw std::invalid_argument("assignment_oracle: more than 64 right vertices unsupported");
    std::vector<std::uint64_t> adj(a, 0);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (g.has_edge(lefts[i], rights[j])) adj[i] |= 1ull << j;

    long long best = (long long)k + 1;
    std::vector<std::uint64_t> lmask(a, 0);
    // mismatch cost of putting right j alone into a given slot, against the
    // left vertices assigned so far
    std::vector<long long> slot_cost((std::size_t)std::max(b, 1) * std::max(ell, 1), 0);

    std::function<void(int, int, long long)> rec_right;
    std::function<void(int, int, long long)> rec_left;

    auto right_bound = [&](int from, int used) {
        long long sum = 0;
        int hi = std::min(used, ell - 1);
        for (int j = from; j < b; ++j) {
            const long long* row = &slot_cost[(std::size_t)j * ell];
            long long lb = row[0];
            for (int s = 1; s <= hi; ++s) lb = std::min(lb, row[s]);
            if (variant == Variant::two_sided && opt.allow_splits) lb = std::min<long long>(lb, 1);
            sum += lb;
        }
        return sum;
    };

    rec_right = [&](int j, int used, long long cost) {
        if (cost + right_bound(j, used) >= best) return;
        if (j == b) {
            best = cost;
            return;
        }
        bool singles_only = !opt.allow_splits || variant == Variant::one_sided;
        int top = std::min(used + 1, ell);
        for (int s = 1; s <= top; ++s) {  // singleton memberships
            long long c2 = cost + slot_cost[(std::size_t)j * ell + (s - 1)];
            rec_right(j + 1, std::max(used, s), c2);
        }
        if (singles_only) return;
        // multi-slot memberships: subsets of used+fresh slots, splits = |S|-1
        std::vector<int> pick;
        std::function<void(int)> subsets = [&](int next) {
            if (pick.size() >= 2) {
                std::uint64_t m = 0;
                for (int x : pick) m |= 1ull << (x - 1);
                long long c2 = cost + (long long)pick.size() - 1;
                for (int i = 0; i < a; ++i) {
                    bool e = (adj[i] >> j) & 1;
                    bool sh = (lmask[i] & m) != 0;
                    if (e ? !sh : sh) ++c2;
                }
                int newused = std::max(used, pick.back());
                if (c2 < best) rec_right(j + 1, newused, c2);
            }
            if ((int)pick.size() - 1 >= k) return;  // split budget
            int hi = std::min(pick.empty() ? used + 1 : (pick.back() >= used ? pick.back() + 1 : used + 1), ell);
            for (int x = next; x <= hi; ++x) {
                pick.push_back(x);
                subsets(x + 1);
                pick.pop_back();
            }
        };
        subsets(1);
    };

    rec_left = [&](int i, int used, long long splits) {
        if (splits + right_bound(0, used) >= best) return;
        if (i == a) {
            rec_right(0, used, splits);
            return;
        }
        std::vector<int> pick;
        auto with_set = [&](int newused) {
            std::uint64_t m = 0;
            for (int x : pick) m |= 1ull << (x - 1);
            lmask[i] = m;
            for (int j = 0; j < b; ++j) {
                bool e = (adj[i] >> j) & 1;
                long long* row = &slot_cost[(std::size_t)j * ell];
                for (int s = 0; s < ell; ++s) {
                    bool in = (m >> s) & 1;
                    if (e ? !in : in) ++row[s];
                }
            }
            rec_left(i + 1, newused, splits + (long long)pick.size() - 1);
            for (int j = 0; j < b; ++j) {
                bool e = (adj[i] >> j) & 1;
                long long* row = &slot_cost[(std::size_t)j * ell];
                for (int s = 0; s < ell; ++s) {
                    bool in = (m >> s) & 1;
                    if (e ? !in : in) --row[s];
                }
            }
            lmask[i] = 0;
        };
        std::function<void(int)> subsets = [&](int next) {
            if (!pick.empty()) with_set(std::max(used, pick.back()));
            if ((int)pick.size() - 1 >= k - splits) return;  // split budget
            if (!opt.allow_splits && pick.size() >= 1) return;
            int hi = std::min(pick.empty() ? used + 1 : (pick.back() >= used ? pick.back() + 1 : used + 1), ell);
            for (int x = next; x <= hi; ++x) {
                pick.push_back(x);
                subsets(x + 1);
                pick.pop_back();
            }
        };
        subsets(1);
    };

    if (a + b == 0) return {Decision::yes, 0};
    rec_left(0, 0, 0);
    if (best <= k) return {Decision::yes, (int)best};
    return {Decision::no, std::nullopt};
}

}  // namespace bsplit
