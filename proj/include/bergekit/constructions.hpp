#pragma once

// Parameterized hypergraph families. Labelings are part of the contract:
// build_extremal puts the core first (labels 0..a-1), build_gkl1 and the
// block union use consecutive blocks, build_tree_like shares vertex 0 among
// all blocks. Infeasible parameters raise std::invalid_argument naming the
// violated inequality.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bergekit/hypergraph.hpp"

namespace bergekit {

/// Parameters of the extremal family. The core size a is always derived from
/// k on demand, never stored separately.
struct ExtremalParams {
    int n = 0;
    int k = 0;
    int r = 0;
    int a() const { return (k - 1) / 2; }
};

/// The vertex partition a construction guarantees: a core A, a periphery B,
/// and for even path bounds, the special periphery pair {b1, b2} that carries
/// the extra edges.
struct PartitionedConstruction {
    VertexSet core;
    VertexSet periphery;
    std::optional<std::pair<int, int>> special_pair;
};

struct ExtremalConstruction {
    Hypergraph graph;
    PartitionedConstruction partition;
    ExtremalParams params;
};

namespace detail {

/// Calls fn(combination) for every size-k subset of pool, in lexicographic
/// order of positions (hence of values when pool is sorted ascending).
template <class Fn>
inline void for_each_combination(const std::vector<int>& pool, int k, Fn&& fn) {
    if (k < 0 || k > static_cast<int>(pool.size())) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (;;) {
        for (int i = 0; i < k; ++i)
            combo[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        fn(combo);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(pool.size()) - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline std::vector<int> iota_range(int lo, int hi) {  // [lo, hi)
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(hi > lo ? hi - lo : 0));
    for (int v = lo; v < hi; ++v) out.push_back(v);
    return out;
}

[[noreturn]] inline void infeasible(const std::string& inequality, const std::string& actual) {
    throw std::invalid_argument("construction infeasible: requires " + inequality + ", but " +
                                actual);
}

}  // namespace detail

/// The extremal family for hosts with no Berge path of length k. Core
/// A = {0, ..., a-1} with a = floor((k-1)/2); periphery B is the rest. Edges
/// are all r-sets with at least r-1 vertices in A; when k is even, also all
/// r-sets containing both of the two smallest periphery vertices b1, b2 with
/// the remaining r-2 vertices in A.
inline ExtremalConstruction build_extremal(int n, int k, int r) {
    ExtremalParams params{n, k, r};
    int a = params.a();
    if (r < 2) detail::infeasible("r >= 2", "r = " + std::to_string(r));
    if (a < r - 1)
        detail::infeasible("floor((k-1)/2) >= r-1",
                           "floor((k-1)/2) = " + std::to_string(a) + " and r-1 = " +
                               std::to_string(r - 1));
    bool even = k % 2 == 0;
    if (!even && n < a + 1)
        detail::infeasible("n >= floor((k-1)/2) + 1",
                           "n = " + std::to_string(n) + " and floor((k-1)/2) + 1 = " +
                               std::to_string(a + 1));
    if (even && n < a + 2)
        detail::infeasible("n >= (k-2)/2 + 2",
                           "n = " + std::to_string(n) + " and (k-2)/2 + 2 = " +
                               std::to_string(a + 2));
    std::vector<int> core_vertices = detail::iota_range(0, a);
    std::vector<Edge> edges;
    // r-1 core vertices plus one periphery vertex.
    detail::for_each_combination(core_vertices, r - 1, [&](const std::vector<int>& combo) {
        for (int b = a; b < n; ++b) {
            Edge e = combo;
            e.push_back(b);
            edges.push_back(std::move(e));
        }
    });
    // Edges entirely inside the core.
    detail::for_each_combination(core_vertices, r, [&](const std::vector<int>& combo) {
        edges.push_back(combo);
    });
    std::optional<std::pair<int, int>> special;
    if (even) {
        special = std::make_pair(a, a + 1);
        detail::for_each_combination(core_vertices, r - 2, [&](const std::vector<int>& combo) {
            Edge e = combo;
            e.push_back(a);
            e.push_back(a + 1);
            edges.push_back(std::move(e));
        });
    }
    PartitionedConstruction partition{VertexSet::of(n, core_vertices),
                                      VertexSet::of(n, detail::iota_range(a, n)), special};
    return ExtremalConstruction{Hypergraph(n, r, std::move(edges)), std::move(partition), params};
}

/// The comment line recording the partition of an extremal construction, in
/// the form "# A=0,1,2 B=3,4,5 b1=3 b2=4" (the pair appears only when the
/// construction carries one).
inline std::string partition_comment(const ExtremalConstruction& c) {
    auto join = [](const std::vector<int>& ids) {
        std::string out;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(ids[i]);
        }
        return out;
    };
    std::string line = "# A=" + join(c.partition.core.to_vector()) +
                       " B=" + join(c.partition.periphery.to_vector());
    if (c.partition.special_pair)
        line += " b1=" + std::to_string(c.partition.special_pair->first) +
                " b2=" + std::to_string(c.partition.special_pair->second);
    return line;
}

/// All binom(n, r) edges on n vertices.
inline Hypergraph build_complete(int n, int r) {
    if (n < r) detail::infeasible("n >= r", "n = " + std::to_string(n) + " and r = " + std::to_string(r));
    std::vector<Edge> edges;
    detail::for_each_combination(detail::iota_range(0, n), r,
                                 [&](const std::vector<int>& combo) { edges.push_back(combo); });
    return Hypergraph(n, r, std::move(edges));
}

/// Blocks of r+1 consecutive vertices, each carrying the k-1 lexicographically
/// smallest r-subsets of the block. Tight for the r >= k regime when (r+1)
/// divides n.
inline Hypergraph build_gkl1(int n, int k, int r) {
    if (r < 2) detail::infeasible("r >= 2", "r = " + std::to_string(r));
    if (n % (r + 1) != 0)
        detail::infeasible("(r+1) | n", "n = " + std::to_string(n) + " and r+1 = " +
                                            std::to_string(r + 1));
    if (k - 1 < 1 || k - 1 > r + 1)
        detail::infeasible("1 <= k-1 <= r+1", "k-1 = " + std::to_string(k - 1) + " and r+1 = " +
                                                  std::to_string(r + 1));
    std::vector<Edge> edges;
    for (int base = 0; base < n; base += r + 1) {
        int taken = 0;
        detail::for_each_combination(detail::iota_range(base, base + r + 1), r,
                                     [&](const std::vector<int>& combo) {
                                         if (taken < k - 1) edges.push_back(combo);
                                         ++taken;
                                     });
    }
    return Hypergraph(n, r, std::move(edges));
}

/// (n-1)/(k-2) complete blocks of k-1 vertices arranged in a star: block i
/// consists of the shared vertex 0 and k-2 fresh vertices, and carries all
/// binom(k-1, r) edges on its vertex set.
inline Hypergraph build_tree_like(int n, int k, int r) {
    if (r < 2) detail::infeasible("r >= 2", "r = " + std::to_string(r));
    if (k - 1 < r)
        detail::infeasible("k-1 >= r", "k-1 = " + std::to_string(k - 1) + " and r = " +
                                           std::to_string(r));
    if (n < 1 || (n - 1) % (k - 2) != 0)
        detail::infeasible("(k-2) | (n-1)", "n-1 = " + std::to_string(n - 1) + " and k-2 = " +
                                                std::to_string(k - 2));
    std::vector<Edge> edges;
    int blocks = (n - 1) / (k - 2);
    for (int i = 0; i < blocks; ++i) {
        std::vector<int> block = {0};
        for (int v = 1 + i * (k - 2); v < 1 + (i + 1) * (k - 2); ++v) block.push_back(v);
        detail::for_each_combination(block, r,
                                     [&](const std::vector<int>& combo) { edges.push_back(combo); });
    }
    return Hypergraph(n, r, std::move(edges));
}

/// Disjoint union on relabeled vertices: part i keeps its internal order,
/// shifted past all earlier parts. All parts must share one uniformity.
inline Hypergraph disjoint_union(const std::vector<Hypergraph>& parts) {
    if (parts.empty()) return Hypergraph(0, 2, {});
    int r = parts.front().uniformity();
    int n = 0;
    std::vector<Edge> edges;
    for (const Hypergraph& part : parts) {
        if (part.uniformity() != r)
            throw std::invalid_argument("disjoint_union: uniformity mismatch: " +
                                        std::to_string(part.uniformity()) + " vs " +
                                        std::to_string(r));
        for (Edge e : part.edges()) {
            for (int& v : e) v += n;
            edges.push_back(std::move(e));
        }
        n += part.vertex_count();
    }
    return Hypergraph(n, r, std::move(edges));
}

/// floor(n/k) disjoint complete blocks of k vertices, plus n mod k isolated
/// vertices at the top of the id range. Tight for the k >= r+1 regime when k
/// divides n.
inline Hypergraph build_block_union(int n, int k, int r) {
    if (k < r) detail::infeasible("k >= r", "k = " + std::to_string(k) + " and r = " + std::to_string(r));
    if (n < 0) detail::infeasible("n >= 0", "n = " + std::to_string(n));
    std::vector<Hypergraph> parts;
    for (int i = 0; i + k <= n; i += k) parts.push_back(build_complete(k, r));
    Hypergraph joined = disjoint_union(parts);
    if (joined.vertex_count() == n) return joined;
    return Hypergraph(n, r, joined.edges());
}

}  // namespace bergekit
