#pragma once

// Corpus benchmarking: per instance and budget, kernel statistics against
// the 6k / 6k(k+1) bounds plus solver outcome.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bsplit/io.hpp"
#include "bsplit/solver.hpp"
#include "bsplit/twins.hpp"

namespace bsplit {

struct BenchRow {
    std::string instance;
    int k = 0;
    int n = 0;
    long long m = 0;
    long long classes = 0;
    long long kernel_classes = 0;
    long long kernel_vertices = 0;
    long long bound_classes = 0;   // 6k
    long long bound_vertices = 0;  // 6k(k+1)
    std::string decision;          // yes / no / trivially-no
    std::optional<int> opt_cost;
    long long candidates = 0;
    double wall_ms = 0;
};

inline BenchRow bench_instance(const std::string& name, const BipartiteGraph& g, int k, Variant variant) {
    BenchRow row;
    row.instance = name;
    row.k = k;
    row.n = g.total_count();
    row.m = g.edge_count();
    SolveResult res = solve(g, k, variant);
    row.classes = res.stats.kernel.classes_before;
    row.kernel_classes = res.stats.kernel.classes_after;
    row.kernel_vertices = res.kernel_graph ? res.kernel_graph->total_count() : 0;
    row.bound_classes = 6LL * k;
    row.bound_vertices = 6LL * k * (k + 1);
    row.decision = res.decision == Decision::yes ? "yes" : (res.kernel_graph ? "no" : "trivially-no");
    row.opt_cost = res.opt_cost;
    row.candidates = res.stats.candidates_explored;
    row.wall_ms = res.stats.wall_ms;
    return row;
}

// Deterministic order: corpus files sorted by name, budgets in given order.
// Unreadable or malformed entries land in `errors` and are skipped.
inline std::vector<BenchRow> run_bench(const std::vector<std::filesystem::path>& files,
                                       const std::vector<int>& budgets, Variant variant,
                                       std::vector<std::string>& errors) {
    std::vector<std::filesystem::path> sorted = files;
    std::sort(sorted.begin(), sorted.end());
    std::vector<BenchRow> rows;
    for (const auto& f : sorted) {
        BipartiteGraph g;
        try {
            std::ifstream in(f);
            if (!in) throw std::runtime_error("cannot open");
            g = parse_graph(in);
        } catch (const std::exception& e) {
            errors.push_back(f.string() + ": " + e.what());
            continue;
        }
        for (int k : budgets) rows.push_back(bench_instance(f.filename().string(), g, k, variant));
    }
    return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "instance,k,n,m,classes,kernel_classes,kernel_vertices,bound_6k,bound_6k_k1,decision,opt_cost,"
           "candidates,wall_ms\n";
    for (const BenchRow& r : rows) {
        out << r.instance << ',' << r.k << ',' << r.n << ',' << r.m << ',' << r.classes << ',' << r.kernel_classes
            << ',' << r.kernel_vertices << ',' << r.bound_classes << ',' << r.bound_vertices << ',' << r.decision
            << ',' << (r.opt_cost ? std::to_string(*r.opt_cost) : "") << ',' << r.candidates << ',' << r.wall_ms
            << "\n";
    }
    return out.str();
}

inline std::string bench_json(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const BenchRow& r = rows[i];
        out << "  {\"instance\":\"" << r.instance << "\",\"k\":" << r.k << ",\"n\":" << r.n << ",\"m\":" << r.m
            << ",\"classes\":" << r.classes << ",\"kernel_classes\":" << r.kernel_classes
            << ",\"kernel_vertices\":" << r.kernel_vertices << ",\"bound_6k\":" << r.bound_classes
            << ",\"bound_6k_k1\":" << r.bound_vertices << ",\"decision\":\"" << r.decision << "\",\"opt_cost\":"
            << (r.opt_cost ? std::to_string(*r.opt_cost) : "null") << ",\"candidates\":" << r.candidates
            << ",\"wall_ms\":" << r.wall_ms << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "]\n";
    return out.str();
}

}  // namespace bsplit
