#pragma once

// Class-to-biclique-slot assignments: the solver's candidate solutions.
// A singleton membership pins a class to one biclique side; a multi-slot
// membership means every vertex of the class is split across those slots.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "bsplit/twins.hpp"

namespace bsplit {

using SlotSet = std::vector<int>;  // strictly increasing, 1-based slot indices

struct Assignment {
    int ell = 0;
    std::vector<SlotSet> left;   // per left class, partition order
    std::vector<SlotSet> right;  // per right class
    bool operator==(const Assignment&) const = default;
};

struct CostBreakdown {
    long long splits = 0;
    long long insertions = 0;
    long long deletions = 0;
    long long total() const { return splits + insertions + deletions; }
    bool operator==(const CostBreakdown&) const = default;
};

namespace detail {

inline std::uint64_t slot_mask(const SlotSet& s, int ell) {
    if (ell > 64) throw std::invalid_argument("more than 64 slots unsupported");
    std::uint64_t m = 0;
    int prev = 0;
    for (int x : s) {
        if (x <= prev) throw std::invalid_argument("membership set not strictly increasing");
        if (x < 1 || x > ell) throw std::invalid_argument("slot index out of range");
        m |= 1ull << (x - 1);
        prev = x;
    }
    if (m == 0) throw std::invalid_argument("empty membership set");
    return m;
}

// Canonical membership options for the next class, given that slots 1..used
// are in use: any non-empty subset of the used slots extended by a
// consecutive run of fresh slots, sizes capped by max_size. Sorted
// lexicographically (= deterministic branch order).
inline std::vector<SlotSet> membership_options(int used, int ell, int max_size, bool singleton_only) {
    std::vector<SlotSet> out;
    if (singleton_only || max_size <= 1) {
        for (int j = 1; j <= used; ++j) out.push_back({j});
        if (used < ell) out.push_back({used + 1});
        return out;
    }
    std::vector<int> pick;
    auto emit = [&](int fresh) {
        SlotSet s = pick;
        for (int r = 1; r <= fresh; ++r) s.push_back(used + r);
        if (!s.empty()) out.push_back(std::move(s));
    };
    // subsets of [1..used] of size <= max_size, then fresh extensions
    std::function<void(int)> rec = [&](int next) {
        int max_fresh = std::min(ell - used, max_size - (int)pick.size());
        for (int f = ((int)pick.size() == 0 ? 1 : 0); f <= max_fresh; ++f) emit(f);
        if ((int)pick.size() >= max_size) return;
        for (int j = next; j <= used; ++j) {
            pick.push_back(j);
            rec(j + 1);
            pick.pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// splits   = sum over classes of weight * (|memberships| - 1)
// deletions: adjacent class pairs whose memberships are disjoint
// insertions: non-adjacent class pairs whose memberships intersect
// each contributing weight * weight.
inline CostBreakdown assignment_cost(const QuotientGraph& q, const Assignment& a) {
    int p = q.left_count;
    int r = (int)q.nodes.size() - p;
    if ((int)a.left.size() != p || (int)a.right.size() != r)
        throw std::invalid_argument("assignment does not match the quotient's class counts");
    std::vector<std::uint64_t> lm(p), rm(r);
    CostBreakdown cost;
    for (int i = 0; i < p; ++i) {
        lm[i] = detail::slot_mask(a.left[i], a.ell);
        cost.splits += (long long)q.nodes[i].weight * ((long long)a.left[i].size() - 1);
    }
    for (int j = 0; j < r; ++j) {
        rm[j] = detail::slot_mask(a.right[j], a.ell);
        cost.splits += (long long)q.nodes[p + j].weight * ((long long)a.right[j].size() - 1);
    }
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < r; ++j) {
            long long w = (long long)q.nodes[i].weight * q.nodes[p + j].weight;
            bool adj = q.adjacent(i, p + j);
            bool shared = (lm[i] & rm[j]) != 0;
            if (adj && !shared) cost.deletions += w;
            if (!adj && shared) cost.insertions += w;
        }
    }
    return cost;
}

// Renumbers slots by first use (left classes in order, then right classes;
// within a set, slots scanned in increasing order). Identity exactly on the
// assignments the canonical enumeration produces.
inline Assignment canonical_assignment(const Assignment& a) {
    std::vector<int> remap(a.ell + 1, 0);
    int next = 0;
    auto visit = [&](const std::vector<SlotSet>& block) {
        for (const SlotSet& s : block)
            for (int x : s)
                if (x >= 1 && x <= a.ell && remap[x] == 0) remap[x] = ++next;
    };
    visit(a.left);
    visit(a.right);
    Assignment out;
    out.ell = a.ell;
    auto apply_block = [&](const std::vector<SlotSet>& block) {
        std::vector<SlotSet> res;
        for (const SlotSet& s : block) {
            SlotSet t;
            for (int x : s) t.push_back(remap[x]);
            std::sort(t.begin(), t.end());
            res.push_back(std::move(t));
        }
        return res;
    };
    out.left = apply_block(a.left);
    out.right = apply_block(a.right);
    return out;
}

inline int slot_budget(int k, std::size_t class_count) {
    return (int)std::min<long long>(2LL * k, (long long)class_count);
}

// Streams exactly the canonical assignments over the quotient's classes,
// rejecting any assignment whose multi-slot classes weigh more than k in
// total (those classes' vertices all split at least once). The callback
// returns false to stop the stream. Deterministic lexicographic order.
inline void enumerate_candidates(const QuotientGraph& q, int k, Variant variant,
                                 const std::function<bool(const Assignment&)>& yield) {
    int p = q.left_count;
    int r = (int)q.nodes.size() - p;
    int ell = slot_budget(k, q.nodes.size());
    Assignment cur;
    cur.ell = ell;
    cur.left.resize(p);
    cur.right.resize(r);
    bool stop = false;

    std::function<void(int, int, long long)> rec = [&](int idx, int used, long long c_weight) {
        if (stop) return;
        if (idx == p + r) {
            if (!yield(cur)) stop = true;
            return;
        }
        bool is_left = idx < p;
        int weight = q.nodes[idx].weight;
        bool singleton_only = !is_left && variant == Variant::one_sided;
        bool multi_ok = c_weight + weight <= k;
        auto options = detail::membership_options(used, ell, multi_ok ? ell : 1, singleton_only);
        for (SlotSet& s : options) {
            int fresh = s.empty() ? 0 : std::max(0, s.back() - used);
            long long cw = c_weight + (s.size() >= 2 ? weight : 0);
            if (cw > k) continue;
            SlotSet& target = is_left ? cur.left[idx] : cur.right[idx - p];
            target = std::move(s);
            rec(idx + 1, used + fresh, cw);
            target.clear();
            if (stop) return;
        }
    };
    rec(0, 0, 0);
}

inline std::vector<Assignment> collect_candidates(const QuotientGraph& q, int k, Variant variant) {
    std::vector<Assignment> out;
    enumerate_candidates(q, k, variant, [&](const Assignment& a) {
        out.push_back(a);
        return true;
    });
    return out;
}

}  // namespace bsplit
