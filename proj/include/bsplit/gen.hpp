#pragma once

// Seeded planted-instance generator: disjoint bicliques, a chosen number of
// left vertices planted into two clusters (overlap), then random edge-flip
// noise. The planted assignment and its cost ship as a certificate.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "bsplit/assignment.hpp"
#include "bsplit/graph.hpp"

namespace bsplit {

struct GenSpec {
    int left_clusters = 2;
    int right_clusters = 2;
    int size_min = 2;
    int size_max = 3;
    int overlap_vertices = 0;
    int noise_edits = 0;
    std::uint64_t seed = 1;
};

struct PlantedInstance {
    BipartiteGraph graph;
    std::vector<SlotSet> left_assignment;   // per left vertex (id order)
    std::vector<SlotSet> right_assignment;  // per right vertex
    long long certificate_cost = 0;         // cost of the planted assignment on the emitted graph
};

namespace detail {

// mt19937_64 with explicit reduction; std::uniform_int_distribution is not
// portable across standard libraries.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

}  // namespace detail

inline PlantedInstance gen_planted(const GenSpec& spec) {
    if (spec.left_clusters < 0 || spec.right_clusters < 0) throw std::invalid_argument("negative cluster count");
    if (spec.size_min < 1 || spec.size_min > spec.size_max) throw std::invalid_argument("bad cluster size range");
    if (spec.overlap_vertices < 0 || spec.noise_edits < 0) throw std::invalid_argument("negative edit count");

    std::mt19937_64 rng(spec.seed);
    int clusters = std::max(spec.left_clusters, spec.right_clusters);
    auto size_of = [&]() { return spec.size_min + (int)detail::rand_below(rng, spec.size_max - spec.size_min + 1); };

    std::vector<int> left_cluster_of, right_cluster_of;  // per vertex (0-based cluster)
    for (int c = 0; c < clusters; ++c) {
        if (c < spec.left_clusters)
            for (int t = size_of(); t > 0; --t) left_cluster_of.push_back(c);
        if (c < spec.right_clusters)
            for (int t = size_of(); t > 0; --t) right_cluster_of.push_back(c);
    }
    int n1 = (int)left_cluster_of.size(), n2 = (int)right_cluster_of.size();

    std::vector<SlotSet> la(n1), ra(n2);
    for (int i = 0; i < n1; ++i) la[i] = {left_cluster_of[i] + 1};
    for (int j = 0; j < n2; ++j) ra[j] = {right_cluster_of[j] + 1};

    if (spec.overlap_vertices > n1) throw std::invalid_argument("overlap_vertices exceeds available left vertices");
    if (spec.overlap_vertices > 0 && clusters < 2)
        throw std::invalid_argument("overlap requires at least two clusters");
    // pick distinct overlap vertices, each joining one extra cluster
    std::vector<int> perm(n1);
    for (int i = 0; i < n1; ++i) perm[i] = i;
    for (int i = 0; i < spec.overlap_vertices; ++i) {
        int j = i + (int)detail::rand_below(rng, n1 - i);
        std::swap(perm[i], perm[j]);
        int v = perm[i];
        int extra = (int)detail::rand_below(rng, clusters - 1);
        if (extra + 1 == la[v][0]) extra = clusters - 1;
        la[v].push_back(extra + 1);
        std::sort(la[v].begin(), la[v].end());
    }

    BipartiteGraph g(n1, n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            bool shared = false;
            for (int c : la[i])
                if (c == ra[j][0]) shared = true;
            if (shared) g.add_edge(i + 1, j + 1);
        }

    for (int t = 0; t < spec.noise_edits; ++t) {
        if (n1 == 0 || n2 == 0) break;
        int u = 1 + (int)detail::rand_below(rng, n1);
        int v = 1 + (int)detail::rand_below(rng, n2);
        VertexId lu{Side::left, u, {}}, rv{Side::right, v, {}};
        if (g.has_edge(lu, rv))
            g.delete_edge(lu, rv);
        else
            g.insert_edge(lu, rv);
    }

    // certificate: the planted assignment priced on the emitted graph
    long long cost = 0;
    for (int i = 0; i < n1; ++i) cost += (long long)la[i].size() - 1;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            bool shared = false;
            for (int c : la[i])
                for (int d : ra[j])
                    if (c == d) shared = true;
            bool edge = g.has_edge({Side::left, i + 1, {}}, {Side::right, j + 1, {}});
            if (edge != shared) ++cost;
        }
    return {std::move(g), std::move(la), std::move(ra), cost};
}

}  // namespace bsplit
