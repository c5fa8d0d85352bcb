#pragma once

// Berge-path and Berge-cycle certificates and the operations that manipulate
// them without searching: verification, reversal, rotation at a terminal,
// neighborhood of a terminal outside the defining edges, and index shifts of
// vertex subsets along a path.
//
// A Berge path of length l is a sequence u_1, f_1, u_2, ..., f_l, u_{l+1} of
// l+1 distinct vertices and l distinct edges with {u_i, u_{i+1}} inside f_i.
// A Berge cycle of length t closes the sequence: indices wrap modulo t and
// t >= 2 is permitted, so two edges sharing two vertices already form a
// cycle. Certificates store vertex ids and edge ids (positions into
// Hypergraph::edges()); they are plain data and carry no pointer back to the
// host hypergraph.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bergekit/hypergraph.hpp"

namespace bergekit {

struct BergePath {
    std::vector<int> vertices;      // u_1 .. u_{l+1}
    std::vector<int> edge_indexes;  // f_1 .. f_l
    int length() const { return static_cast<int>(edge_indexes.size()); }
    friend bool operator==(const BergePath&, const BergePath&) = default;
};

struct BergeCycle {
    std::vector<int> vertices;      // v_1 .. v_t
    std::vector<int> edge_indexes;  // h_1 .. h_t, h_i covers {v_i, v_{i+1 mod t}}
    int length() const { return static_cast<int>(edge_indexes.size()); }
    friend bool operator==(const BergeCycle&, const BergeCycle&) = default;
};

/// Violations are expected outputs of verification, not exceptions. position
/// is the 0-based index into the offending array (vertices or edge_indexes),
/// or -1 when the certificate is well formed.
struct VerifyResult {
    bool ok = true;
    std::string message;
    int position = -1;
};

namespace detail {

inline std::optional<VerifyResult> check_distinct_in_range(const std::vector<int>& ids, int bound,
                                                           const char* what) {
    std::set<int> seen;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= bound)
            return VerifyResult{false,
                                std::string(what) + " " + std::to_string(ids[i]) +
                                    " out of range at position " + std::to_string(i),
                                static_cast<int>(i)};
        if (!seen.insert(ids[i]).second)
            return VerifyResult{false,
                                std::string("duplicate ") + what + " " + std::to_string(ids[i]) +
                                    " at position " + std::to_string(i),
                                static_cast<int>(i)};
    }
    return std::nullopt;
}

}  // namespace detail

inline VerifyResult verify_path(const Hypergraph& h, const BergePath& p) {
    if (p.edge_indexes.empty())
        return {false, "path has no edges (length 0 is not a path)", 0};
    if (p.vertices.size() != p.edge_indexes.size() + 1)
        return {false,
                "vertex/edge count mismatch: " + std::to_string(p.vertices.size()) +
                    " vertices with " + std::to_string(p.edge_indexes.size()) + " edges",
                0};
    if (auto bad = detail::check_distinct_in_range(p.vertices, h.vertex_count(), "vertex")) return *bad;
    if (auto bad = detail::check_distinct_in_range(p.edge_indexes, h.edge_count(), "edge index"))
        return *bad;
    for (std::size_t i = 0; i < p.edge_indexes.size(); ++i) {
        int e = p.edge_indexes[i];
        if (!h.edge_contains(e, p.vertices[i]) || !h.edge_contains(e, p.vertices[i + 1]))
            return {false,
                    "edge " + std::to_string(e) + " at position " + std::to_string(i) +
                        " does not contain the consecutive pair {" + std::to_string(p.vertices[i]) +
                        "," + std::to_string(p.vertices[i + 1]) + "}",
                    static_cast<int>(i)};
    }
    return {};
}

inline VerifyResult verify_cycle(const Hypergraph& h, const BergeCycle& c) {
    if (c.vertices.size() != c.edge_indexes.size())
        return {false,
                "vertex/edge count mismatch: " + std::to_string(c.vertices.size()) +
                    " vertices with " + std::to_string(c.edge_indexes.size()) + " edges",
                0};
    if (c.length() < 2)
        return {false, "cycle length " + std::to_string(c.length()) + " is below 2", 0};
    if (auto bad = detail::check_distinct_in_range(c.vertices, h.vertex_count(), "vertex")) return *bad;
    if (auto bad = detail::check_distinct_in_range(c.edge_indexes, h.edge_count(), "edge index"))
        return *bad;
    std::size_t t = c.vertices.size();
    for (std::size_t i = 0; i < t; ++i) {
        int e = c.edge_indexes[i];
        int a = c.vertices[i];
        int b = c.vertices[(i + 1) % t];
        if (!h.edge_contains(e, a) || !h.edge_contains(e, b))
            return {false,
                    "edge " + std::to_string(e) + " at position " + std::to_string(i) +
                        " does not contain the pair {" + std::to_string(a) + "," +
                        std::to_string(b) + "}" + (i + 1 == t ? " closing the cycle" : ""),
                    static_cast<int>(i)};
    }
    return {};
}

/// The reverse of a Berge path is a Berge path.
inline BergePath reversed(const BergePath& p) {
    BergePath out = p;
    std::reverse(out.vertices.begin(), out.vertices.end());
    std::reverse(out.edge_indexes.begin(), out.edge_indexes.end());
    return out;
}

namespace detail {

inline void require_valid_path(const Hypergraph& h, const BergePath& p, const char* op) {
    VerifyResult v = verify_path(h, p);
    if (!v.ok) throw std::invalid_argument(std::string(op) + ": input path invalid: " + v.message);
}

}  // namespace detail

/// All rotations of p at its first terminal: for every position i >= 2
/// (1-based) whose defining edge f_i contains u_1, the rotated path
///   u_i, f_{i-1}, u_{i-1}, ..., u_2, f_1, u_1, f_i, u_{i+1}, ..., u_{l+1}
/// is emitted. Every output is a Berge path with the same length, the same
/// defining vertex set and the same defining edge set as p; only the terminal
/// changes. Outputs are ordered by ascending i.
inline std::vector<BergePath> rotations(const Hypergraph& h, const BergePath& p) {
    detail::require_valid_path(h, p, "rotations");
    std::vector<BergePath> out;
    int l = p.length();
    // 0-based pivot j corresponds to 1-based edge index i = j + 1; j = 0 is
    // the identity and is skipped.
    for (int j = 1; j < l; ++j) {
        if (!h.edge_contains(p.edge_indexes[static_cast<std::size_t>(j)], p.vertices.front())) continue;
        BergePath q;
        q.vertices.reserve(p.vertices.size());
        q.edge_indexes.reserve(p.edge_indexes.size());
        for (int i = j; i >= 0; --i) q.vertices.push_back(p.vertices[static_cast<std::size_t>(i)]);
        for (std::size_t i = static_cast<std::size_t>(j) + 1; i < p.vertices.size(); ++i)
            q.vertices.push_back(p.vertices[i]);
        for (int i = j - 1; i >= 0; --i) q.edge_indexes.push_back(p.edge_indexes[static_cast<std::size_t>(i)]);
        for (std::size_t i = static_cast<std::size_t>(j); i < p.edge_indexes.size(); ++i)
            q.edge_indexes.push_back(p.edge_indexes[i]);
        out.push_back(std::move(q));
    }
    return out;
}

enum class PathEnd { head, tail };

/// Neighborhood of the chosen terminal in the hypergraph with the path's
/// defining edges removed.
inline VertexSet endpoint_neighborhood(const Hypergraph& h, const BergePath& p, PathEnd end) {
    detail::require_valid_path(h, p, "endpoint_neighborhood");
    int u = end == PathEnd::head ? p.vertices.front() : p.vertices.back();
    std::vector<char> defining(static_cast<std::size_t>(h.edge_count()), 0);
    for (int e : p.edge_indexes) defining[static_cast<std::size_t>(e)] = 1;
    VertexSet out(h.vertex_count());
    for (int id : h.incident_edges(u)) {
        if (defining[static_cast<std::size_t>(id)]) continue;
        for (int w : h.edge(id))
            if (w != u) out.insert(w);
    }
    return out;
}

/// Number of defining edges of p that contain the chosen terminal.
inline int defining_edges_at_terminal(const Hypergraph& h, const BergePath& p, PathEnd end) {
    detail::require_valid_path(h, p, "defining_edges_at_terminal");
    int u = end == PathEnd::head ? p.vertices.front() : p.vertices.back();
    int count = 0;
    for (int e : p.edge_indexes)
        if (h.edge_contains(e, u)) ++count;
    return count;
}

/// Shifts a subset of the path's vertices back along the path: one step maps
/// S to { u_i : u_{i+1} in S } (u_1 has no predecessor and contributes
/// nothing). steps must be 1 or 2; every member of s must be a path vertex.
inline VertexSet shift_back(const VertexSet& s, const BergePath& p, int steps) {
    if (steps != 1 && steps != 2)
        throw std::invalid_argument("shift_back: steps must be 1 or 2, got " + std::to_string(steps));
    std::vector<int> position(static_cast<std::size_t>(s.universe()), -1);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        int v = p.vertices[i];
        if (v >= 0 && v < s.universe()) position[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    VertexSet current = s;
    for (int v : s.to_vector())
        if (position[static_cast<std::size_t>(v)] < 0)
            throw std::invalid_argument("shift_back: vertex " + std::to_string(v) +
                                        " is not a vertex of the path");
    for (int round = 0; round < steps; ++round) {
        VertexSet next(s.universe());
        for (int v : current.to_vector()) {
            int i = position[static_cast<std::size_t>(v)];
            if (i > 0) next.insert(p.vertices[static_cast<std::size_t>(i - 1)]);
        }
        current = next;
    }
    return current;
}

namespace detail {

// Fowler-Noll-Vo 1a, used for compact state keys and witness file names.
inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        hash ^= static_cast<std::uint64_t>(c);
        hash *= 1099511628211ULL;
    }
    return hash;
}

inline std::uint64_t edge_set_hash(const std::vector<int>& edge_indexes) {
    std::vector<int> sorted = edge_indexes;
    std::sort(sorted.begin(), sorted.end());
    std::string bytes;
    for (int e : sorted) {
        bytes += std::to_string(e);
        bytes += ',';
    }
    return fnv1a(bytes);
}

// Extends the path by one fresh vertex at the chosen terminal through the
// lowest-id non-defining edge, lowest fresh vertex first. Returns the
// extended path, or nothing when the terminal is stuck.
inline std::optional<BergePath> try_extend_once(const Hypergraph& h, const BergePath& p, PathEnd end) {
    int u = end == PathEnd::head ? p.vertices.front() : p.vertices.back();
    std::vector<char> defining(static_cast<std::size_t>(h.edge_count()), 0);
    for (int e : p.edge_indexes) defining[static_cast<std::size_t>(e)] = 1;
    std::vector<char> on_path(static_cast<std::size_t>(h.vertex_count()), 0);
    for (int v : p.vertices) on_path[static_cast<std::size_t>(v)] = 1;
    for (int id : h.incident_edges(u)) {
        if (defining[static_cast<std::size_t>(id)]) continue;
        for (int w : h.edge(id)) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            BergePath q = p;
            if (end == PathEnd::head) {
                q.vertices.insert(q.vertices.begin(), w);
                q.edge_indexes.insert(q.edge_indexes.begin(), id);
            } else {
                q.vertices.push_back(w);
                q.edge_indexes.push_back(id);
            }
            return q;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Grows a path greedily, falling back on rotations when stuck. Extension is
/// attempted at both terminals; when neither moves, the rotation closure is
/// explored breadth-first (rotating at either terminal), capped by a visited
/// set keyed on (terminal vertex, defining edge set hash). The first rotated
/// path that extends restarts the greedy phase. The result is a verified
/// lower bound for the longest Berge path, never claimed optimal.
inline BergePath extend_or_rotate(const Hypergraph& h, const BergePath& start,
                                  std::size_t state_cap = 4096) {
    detail::require_valid_path(h, start, "extend_or_rotate");
    BergePath current = start;
    for (;;) {
        if (auto q = detail::try_extend_once(h, current, PathEnd::tail)) {
            current = std::move(*q);
            continue;
        }
        if (auto q = detail::try_extend_once(h, current, PathEnd::head)) {
            current = std::move(*q);
            continue;
        }
        // Rotation closure around the stuck path.
        std::set<std::pair<std::uint64_t, std::uint64_t>> visited;
        std::deque<BergePath> queue;
        auto state_key = [](const BergePath& p) {
            std::uint64_t ends = (static_cast<std::uint64_t>(p.vertices.front()) << 32) |
                                 static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.vertices.back()));
            return std::make_pair(ends, detail::edge_set_hash(p.edge_indexes));
        };
        visited.insert(state_key(current));
        queue.push_back(current);
        std::optional<BergePath> extended;
        while (!queue.empty() && !extended && visited.size() < state_cap) {
            BergePath base = queue.front();
            queue.pop_front();
            std::vector<BergePath> neighbors = rotations(h, base);
            for (BergePath& r : rotations(h, reversed(base))) neighbors.push_back(reversed(r));
            for (BergePath& q : neighbors) {
                if (auto grown = detail::try_extend_once(h, q, PathEnd::tail)) {
                    extended = std::move(*grown);
                    break;
                }
                if (auto grown = detail::try_extend_once(h, q, PathEnd::head)) {
                    extended = std::move(*grown);
                    break;
                }
                auto key = state_key(q);
                if (visited.insert(key).second) queue.push_back(std::move(q));
            }
        }
        if (!extended) return current;
        current = std::move(*extended);
    }
}

}  // namespace bergekit
