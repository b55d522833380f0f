#pragma once

// Exact decision-and-witness solver: kernelize, then depth-first search over
// canonical class-to-slot assignments with incremental cost lower bounds,
// pruning branches that cannot stay within the budget.

#include <atomic>
#include <chrono>
#include <climits>
#include <optional>
#include <thread>
#include <vector>

#include "bsplit/assignment.hpp"
#include "bsplit/kernel.hpp"
#include "bsplit/witness.hpp"

namespace bsplit {

struct SolveOptions {
    int threads = 1;
};

struct SolveStats {
    KernelStats kernel;
    long long candidates_explored = 0;  // complete assignments evaluated
    long long pruned_branches = 0;      // bound cuts
    double wall_ms = 0;
};

struct SolveResult {
    Decision decision = Decision::no;
    std::optional<int> opt_cost;                 // present iff yes; otherwise only "> k" is known
    std::optional<EditSequence> witness;         // iff yes; applies to kernel_graph
    std::optional<BipartiteGraph> kernel_graph;  // compacted kernel the witness refers to
    SolveStats stats;
};

namespace detail {

struct BBShared {
    std::atomic<long long> best{LLONG_MAX};
    std::atomic<long long> candidates{0};
    std::atomic<long long> pruned{0};
};

struct BranchBest {
    long long cost = LLONG_MAX;
    int branch = INT_MAX;
    std::vector<SlotSet> left, right;
};

// One worker's depth-first search state over the quotient's classes
// (left classes first, then right classes, partition order).
class BBWorker {
  public:
    BBWorker(const QuotientGraph& q, int k, Variant variant, int ell, BBShared& shared)
        : k_(k), variant_(variant), ell_(ell), shared_(shared) {
        p_ = q.left_count;
        r_ = (int)q.nodes.size() - p_;
        wl_.resize(p_);
        wr_.resize(r_);
        for (int i = 0; i < p_; ++i) wl_[i] = q.nodes[i].weight;
        for (int j = 0; j < r_; ++j) wr_[j] = q.nodes[p_ + j].weight;
        words_ = (r_ + 63) / 64;
        lrow_.assign((std::size_t)p_ * std::max(words_, 1), 0);
        for (int i = 0; i < p_; ++i)
            for (int j : q.adj[i]) {
                int jj = j - p_;
                lrow_[(std::size_t)i * words_ + jj / 64] |= 1ull << (jj % 64);
            }
        sl_.assign(p_, 0);
        sr_.assign(r_, 0);
        slot_sets_l_.resize(p_);
        slot_sets_r_.resize(r_);
        costj_.assign((std::size_t)r_ * std::max(ell_, 1), 0);
    }

    // Runs the subtree under one first-class option; branch is its index.
    void run_branch(const SlotSet& first, int branch) {
        branch_ = branch;
        if (p_ > 0) {
            descend_left(0, first);
        } else {
            rlb_suffix_.assign(r_ + 1, 0);
            for (int j = r_ - 1; j >= 0; --j) rlb_suffix_[j] = rlb_suffix_[j + 1] + right_lower_bound(j);
            descend_right(0, first);
        }
    }

    const BranchBest& best() const { return best_; }
    long long candidates = 0, pruned = 0;

  private:
    int k_, p_ = 0, r_ = 0, words_ = 0;
    Variant variant_;
    int ell_;
    BBShared& shared_;
    std::vector<int> wl_, wr_;
    std::vector<std::uint64_t> lrow_;
    std::vector<std::uint64_t> sl_, sr_;
    std::vector<SlotSet> slot_sets_l_, slot_sets_r_;
    std::vector<long long> costj_;  // per right class, per slot: mismatch cost vs assigned lefts
    std::vector<long long> rlb_suffix_;
    long long split_cost_ = 0, edge_cost_ = 0;
    int used_ = 0;
    int branch_ = 0;
    BranchBest best_;

    bool ladj(int i, int j) const { return (lrow_[(std::size_t)i * words_ + j / 64] >> (j % 64)) & 1; }

    long long limit() const { return std::min<long long>(k_, shared_.best.load(std::memory_order_relaxed)); }

    int max_set_size(int weight) const {
        long long room = (k_ - split_cost_) / weight + 1;
        return (int)std::min<long long>(room, ell_);
    }

    void add_left(int i, std::uint64_t mask) {
        for (int j = 0; j < r_; ++j) {
            long long prod = (long long)wl_[i] * wr_[j];
            bool adj = ladj(i, j);
            long long* row = &costj_[(std::size_t)j * ell_];
            for (int s = 0; s < ell_; ++s) {
                bool in = (mask >> s) & 1;
                if (adj ? !in : in) row[s] += prod;
            }
        }
    }

    void sub_left(int i, std::uint64_t mask) {
        for (int j = 0; j < r_; ++j) {
            long long prod = (long long)wl_[i] * wr_[j];
            bool adj = ladj(i, j);
            long long* row = &costj_[(std::size_t)j * ell_];
            for (int s = 0; s < ell_; ++s) {
                bool in = (mask >> s) & 1;
                if (adj ? !in : in) row[s] -= prod;
            }
        }
    }

    long long right_lower_bound(int j) const {
        if (ell_ == 0) return 0;
        const long long* row = &costj_[(std::size_t)j * ell_];
        int hi = std::min(used_, ell_ - 1);
        long long lb = row[0];
        for (int s = 1; s <= hi; ++s) lb = std::min(lb, row[s]);
        if (variant_ == Variant::two_sided) lb = std::min<long long>(lb, wr_[j]);
        return lb;
    }

    long long all_rights_lower_bound() const {
        long long sum = 0;
        for (int j = 0; j < r_; ++j) sum += right_lower_bound(j);
        return sum;
    }

    static std::uint64_t mask_of(const SlotSet& s) {
        std::uint64_t m = 0;
        for (int x : s) m |= 1ull << (x - 1);
        return m;
    }

    void descend_left(int i, const SlotSet& s) {
        std::uint64_t mask = mask_of(s);
        int fresh = std::max(0, s.back() - used_);
        split_cost_ += (long long)wl_[i] * ((long long)s.size() - 1);
        sl_[i] = mask;
        slot_sets_l_[i] = s;
        used_ += fresh;
        add_left(i, mask);
        if (split_cost_ + all_rights_lower_bound() > limit())
            ++pruned;
        else
            left_rec(i + 1);
        sub_left(i, mask);
        used_ -= fresh;
        split_cost_ -= (long long)wl_[i] * ((long long)s.size() - 1);
    }

    void left_rec(int i) {
        if (i == p_) {
            rlb_suffix_.assign(r_ + 1, 0);
            for (int j = r_ - 1; j >= 0; --j) rlb_suffix_[j] = rlb_suffix_[j + 1] + right_lower_bound(j);
            right_rec(0);
            return;
        }
        auto options = membership_options(used_, ell_, max_set_size(wl_[i]), false);
        for (const SlotSet& s : options) descend_left(i, s);
    }

    void descend_right(int j, const SlotSet& s) {
        std::uint64_t mask = mask_of(s);
        long long dsplit = (long long)wr_[j] * ((long long)s.size() - 1);
        long long dedge = 0;
        if (s.size() == 1 && ell_ > 0) {
            dedge = costj_[(std::size_t)j * ell_ + (s[0] - 1)];
        } else {
            for (int i = 0; i < p_; ++i) {
                long long prod = (long long)wl_[i] * wr_[j];
                bool shared_slot = (sl_[i] & mask) != 0;
                if (ladj(i, j) ? !shared_slot : shared_slot) dedge += prod;
            }
        }
        if (split_cost_ + edge_cost_ + dsplit + dedge + rlb_suffix_[j + 1] > limit()) {
            ++pruned;
            return;
        }
        int fresh = std::max(0, s.back() - used_);
        split_cost_ += dsplit;
        edge_cost_ += dedge;
        sr_[j] = mask;
        slot_sets_r_[j] = s;
        used_ += fresh;
        right_rec(j + 1);
        used_ -= fresh;
        edge_cost_ -= dedge;
        split_cost_ -= dsplit;
    }

    void right_rec(int j) {
        if (j == r_) {
            ++candidates;
            long long total = split_cost_ + edge_cost_;
            if (total < best_.cost) {
                best_.cost = total;
                best_.branch = branch_;
                best_.left = slot_sets_l_;
                best_.right = slot_sets_r_;
            }
            long long cur = shared_.best.load(std::memory_order_relaxed);
            while (total < cur && !shared_.best.compare_exchange_weak(cur, total)) {
            }
            return;
        }
        auto options =
            membership_options(used_, ell_, max_set_size(wr_[j]), variant_ == Variant::one_sided);
        for (const SlotSet& s : options) descend_right(j, s);
    }
};

inline BranchBest search_assignments(const QuotientGraph& q, int k, Variant variant, int ell, int threads,
                                     SolveStats& stats) {
    BBShared shared;
    int p = q.left_count;
    int r = (int)q.nodes.size() - p;
    BranchBest overall;
    if (p + r == 0) {
        overall.cost = 0;
        overall.branch = 0;
        stats.candidates_explored = 1;
        return overall;
    }
    int first_weight = q.nodes[0].weight;
    bool first_singleton_only = p == 0 && variant == Variant::one_sided;
    int max_size = (int)std::min<long long>((long long)k / first_weight + 1, ell);
    auto branches = membership_options(0, ell, max_size, first_singleton_only);

    threads = std::max(1, threads);
    threads = std::min(threads, std::max(1, (int)branches.size()));
    std::vector<BranchBest> results((std::size_t)threads);
    std::vector<std::pair<long long, long long>> counters((std::size_t)threads);

    auto work = [&](int w) {
        BBWorker worker(q, k, variant, ell, shared);
        for (std::size_t b = w; b < branches.size(); b += threads) worker.run_branch(branches[b], (int)b);
        BranchBest local = worker.best();
        results[w] = std::move(local);
        counters[w] = {worker.candidates, worker.pruned};
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (int w = 0; w < threads; ++w) {
        stats.candidates_explored += counters[w].first;
        stats.pruned_branches += counters[w].second;
        const BranchBest& cand = results[w];
        if (cand.cost < overall.cost || (cand.cost == overall.cost && cand.branch < overall.branch))
            overall = cand;
    }
    return overall;
}

}  // namespace detail

inline SolveResult solve(const BipartiteGraph& g, int k, Variant variant, const SolveOptions& options = {}) {
    auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    KernelResult kr = kernelize(g, k);
    res.stats.kernel = kr.stats;
    auto finish = [&]() {
        res.stats.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return res;
    };
    if (kr.verdict == KernelVerdict::trivially_no) {
        res.decision = Decision::no;
        return finish();
    }
    BipartiteGraph kernel = compact_originals(*kr.graph).graph;
    CisPartition part = critical_independent_sets(kernel);
    QuotientGraph q = quotient_graph(kernel, part);
    int ell = slot_budget(k, part.size());

    detail::BranchBest best = detail::search_assignments(q, k, variant, ell, options.threads, res.stats);
    if (best.cost > k) {
        res.decision = Decision::no;
        res.kernel_graph = std::move(kernel);
        return finish();
    }
    Assignment a;
    a.ell = ell;
    a.left = best.left;
    a.right = best.right;
    res.decision = Decision::yes;
    res.opt_cost = (int)best.cost;
    res.witness = reconstruct_witness(kernel, part, a);
    res.kernel_graph = std::move(kernel);
    return finish();
}

}  // namespace bsplit
