#pragma once

// r-uniform hypergraphs on dense 0-based vertex ids.
//
// A Hypergraph is immutable after construction: every operation that would
// change it (peeling, relabeling, unions) returns a new value. Edges are
// stored as strictly increasing r-tuples in ascending lexicographic order,
// which makes serialization and equality checks canonical for a fixed
// labeling. Duplicate edges are rejected loudly, never dropped.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bergekit {

/// An edge is a strictly increasing tuple of r vertex ids.
using Edge = std::vector<int>;

/// Subset of the vertex universe [0, n). Equality compares universe and
/// membership, so sets over different universes are never equal.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : bits_(static_cast<std::size_t>(universe < 0 ? 0 : universe), false) {}

    static VertexSet of(int universe, const std::vector<int>& members) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }

    int universe() const { return static_cast<int>(bits_.size()); }

    bool contains(int v) const {
        return v >= 0 && v < universe() && bits_[static_cast<std::size_t>(v)];
    }

    void insert(int v) {
        check_range(v);
        if (!bits_[static_cast<std::size_t>(v)]) {
            bits_[static_cast<std::size_t>(v)] = true;
            ++count_;
        }
    }

    void erase(int v) {
        check_range(v);
        if (bits_[static_cast<std::size_t>(v)]) {
            bits_[static_cast<std::size_t>(v)] = false;
            --count_;
        }
    }

    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count_));
        for (int v = 0; v < universe(); ++v)
            if (bits_[static_cast<std::size_t>(v)]) out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void check_range(int v) const {
        if (v < 0 || v >= universe())
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                    " outside universe [0, " + std::to_string(universe()) + ")");
    }

    std::vector<bool> bits_;
    int count_ = 0;
};

class Hypergraph {
public:
    /// Builds an r-uniform hypergraph on n vertices. Each input edge may be
    /// given in any internal order; it is sorted, then validated: exactly r
    /// distinct vertices, all in [0, n). The edge list is sorted
    /// lexicographically and duplicate edges raise std::invalid_argument.
    Hypergraph(int n, int r, std::vector<Edge> edges)
        : n_(n), r_(r), edges_(std::move(edges)) {
        if (n_ < 0)
            throw std::invalid_argument("Hypergraph: vertex count must be nonnegative, got " +
                                        std::to_string(n_));
        if (r_ < 2)
            throw std::invalid_argument("Hypergraph: uniformity must be at least 2, got " +
                                        std::to_string(r_));
        for (Edge& e : edges_) {
            if (static_cast<int>(e.size()) != r_)
                throw std::invalid_argument("Hypergraph: edge has " + std::to_string(e.size()) +
                                            " vertices, expected " + std::to_string(r_));
            std::sort(e.begin(), e.end());
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 0 || e[i] >= n_)
                    throw std::invalid_argument("Hypergraph: vertex " + std::to_string(e[i]) +
                                                " outside [0, " + std::to_string(n_) + ")");
                if (i > 0 && e[i] == e[i - 1])
                    throw std::invalid_argument("Hypergraph: repeated vertex " + std::to_string(e[i]) +
                                                " within an edge");
            }
        }
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (edges_[i] == edges_[i - 1])
                throw std::invalid_argument("Hypergraph: duplicate edge " + format_edge(edges_[i]));
        incident_.assign(static_cast<std::size_t>(n_), {});
        for (std::size_t id = 0; id < edges_.size(); ++id)
            for (int v : edges_[id])
                incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(id));
    }

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges in ascending lexicographic order; positions are the edge ids
    /// used by certificates.
    const std::vector<Edge>& edges() const { return edges_; }

    const Edge& edge(int id) const {
        check_edge_id(id);
        return edges_[static_cast<std::size_t>(id)];
    }

    /// Ids of the edges containing v, ascending.
    const std::vector<int>& incident_edges(int v) const {
        check_vertex(v);
        return incident_[static_cast<std::size_t>(v)];
    }

    bool edge_contains(int id, int v) const {
        check_edge_id(id);
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        return std::binary_search(e.begin(), e.end(), v);
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

    static std::string format_edge(const Edge& e) {
        std::string out = "{";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(e[i]);
        }
        out += "}";
        return out;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Hypergraph: vertex " + std::to_string(v) +
                                    " outside [0, " + std::to_string(n_) + ")");
    }
    void check_edge_id(int id) const {
        if (id < 0 || id >= edge_count())
            throw std::out_of_range("Hypergraph: edge id " + std::to_string(id) +
                                    " outside [0, " + std::to_string(edge_count()) + ")");
    }

    int n_ = 0;
    int r_ = 2;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

/// Number of edges containing v.
inline int degree(const Hypergraph& h, int v) {
    return static_cast<int>(h.incident_edges(v).size());
}

/// Vertices sharing at least one edge with v, excluding v itself.
inline VertexSet neighborhood(const Hypergraph& h, int v) {
    VertexSet out(h.vertex_count());
    for (int id : h.incident_edges(v))
        for (int w : h.edge(id))
            if (w != v) out.insert(w);
    return out;
}

/// Connectivity under alternating vertex-edge walks. A single vertex is
/// connected; an isolated vertex in a larger hypergraph disconnects it. This
/// matches connectivity of the bipartite incidence graph restricted to the
/// vertex side. The empty universe is vacuously connected.
inline bool is_connected(const Hypergraph& h) {
    int n = h.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen_vertex(static_cast<std::size_t>(n), 0);
    std::vector<char> seen_edge(static_cast<std::size_t>(h.edge_count()), 0);
    std::vector<int> stack = {0};
    seen_vertex[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int id : h.incident_edges(v)) {
            if (seen_edge[static_cast<std::size_t>(id)]) continue;
            seen_edge[static_cast<std::size_t>(id)] = 1;
            for (int w : h.edge(id)) {
                if (seen_vertex[static_cast<std::size_t>(w)]) continue;
                seen_vertex[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

struct PeelResult {
    Hypergraph graph;
    /// old_to_new[v] is the id of v in the peeled hypergraph, or -1 when v
    /// was removed. Survivors keep their relative order.
    std::vector<int> old_to_new;
};

/// Repeatedly removes every vertex of degree < min_degree together with its
/// incident edges until none remains. Removals are batched per round, so the
/// result does not depend on any removal order.
inline PeelResult peel(const Hypergraph& h, long long min_degree) {
    int n = h.vertex_count();
    std::vector<char> alive_vertex(static_cast<std::size_t>(n), 1);
    std::vector<char> alive_edge(static_cast<std::size_t>(h.edge_count()), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<long long> deg(static_cast<std::size_t>(n), 0);
        for (int id = 0; id < h.edge_count(); ++id) {
            if (!alive_edge[static_cast<std::size_t>(id)]) continue;
            for (int v : h.edge(id)) deg[static_cast<std::size_t>(v)] += 1;
        }
        for (int v = 0; v < n; ++v) {
            if (!alive_vertex[static_cast<std::size_t>(v)]) continue;
            if (deg[static_cast<std::size_t>(v)] >= min_degree) continue;
            alive_vertex[static_cast<std::size_t>(v)] = 0;
            for (int id : h.incident_edges(v)) alive_edge[static_cast<std::size_t>(id)] = 0;
            changed = true;
        }
    }
    std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (alive_vertex[static_cast<std::size_t>(v)]) old_to_new[static_cast<std::size_t>(v)] = next++;
    std::vector<Edge> kept;
    for (int id = 0; id < h.edge_count(); ++id) {
        if (!alive_edge[static_cast<std::size_t>(id)]) continue;
        Edge e = h.edge(id);
        for (int& v : e) v = old_to_new[static_cast<std::size_t>(v)];
        kept.push_back(std::move(e));
    }
    return PeelResult{Hypergraph(next, h.uniformity(), std::move(kept)), std::move(old_to_new)};
}

}  // namespace bergekit
