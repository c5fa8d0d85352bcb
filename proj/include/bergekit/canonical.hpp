#pragma once

// Canonical form for desk-scale isomorphism rejection. Two hypergraphs get
// equal canonical forms exactly when they are isomorphic.
//
// The form is the lexicographically smallest serialization of the hypergraph
// over a restricted set of relabelings: vertices are first partitioned by
// iteratively refined invariants (degree, then multisets of incident edge
// color patterns), classes are ordered by their invariant signature, and
// only relabelings that map each class onto its own label block are tried.
// Because the partition and the class order are isomorphism-invariant,
// isomorphic inputs enumerate the same candidate set and agree on the
// minimum; distinct minima certify non-isomorphism. Cost is exponential in
// the largest class, which is fine for the intended n <= ~10.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bergekit/berge.hpp"
#include "bergekit/hypergraph.hpp"
#include "bergekit/io.hpp"

namespace bergekit {

namespace detail {

inline std::vector<int> refined_colors(const Hypergraph& h) {
    int n = h.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    int classes = n > 0 ? 1 : 0;
    for (;;) {
        std::vector<std::string> signature(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<std::string> incident;
            for (int id : h.incident_edges(v)) {
                std::vector<int> pattern;
                for (int w : h.edge(id)) pattern.push_back(color[static_cast<std::size_t>(w)]);
                std::sort(pattern.begin(), pattern.end());
                std::string text;
                for (int c : pattern) text += std::to_string(c) + ".";
                incident.push_back(std::move(text));
            }
            std::sort(incident.begin(), incident.end());
            std::string sig = std::to_string(color[static_cast<std::size_t>(v)]) + "|";
            for (const std::string& t : incident) sig += t + ";";
            signature[static_cast<std::size_t>(v)] = std::move(sig);
        }
        std::map<std::string, int> rank;
        for (int v = 0; v < n; ++v) rank[signature[static_cast<std::size_t>(v)]] = 0;
        int next = 0;
        for (auto& entry : rank) entry.second = next++;
        for (int v = 0; v < n; ++v)
            color[static_cast<std::size_t>(v)] = rank[signature[static_cast<std::size_t>(v)]];
        if (next == classes) return color;
        classes = next;
    }
}

inline std::string relabeled_serialization(const Hypergraph& h, const std::vector<int>& new_label) {
    std::vector<Edge> edges = h.edges();
    for (Edge& e : edges) {
        for (int& v : e) v = new_label[static_cast<std::size_t>(v)];
        std::sort(e.begin(), e.end());
    }
    std::sort(edges.begin(), edges.end());
    std::string out = std::to_string(h.uniformity()) + " " + std::to_string(h.vertex_count()) +
                      " " + std::to_string(edges.size()) + "\n";
    for (const Edge& e : edges) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace detail

/// The canonical serialization described above. It parses back through
/// read_hypergraph, so a canonical form is also a valid hypergraph file.
inline std::string canonical_form(const Hypergraph& h) {
    int n = h.vertex_count();
    std::vector<int> color = detail::refined_colors(h);
    // Vertices of each class, ascending; classes keyed by color id, which is
    // already ordered by the invariant signature.
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[color[static_cast<std::size_t>(v)]].push_back(v);
    std::vector<std::vector<int>> class_members;
    for (auto& entry : classes) class_members.push_back(entry.second);
    std::vector<int> offset;
    int base = 0;
    for (const auto& members : class_members) {
        offset.push_back(base);
        base += static_cast<int>(members.size());
    }
    std::string best;
    std::vector<int> new_label(static_cast<std::size_t>(n), -1);
    auto consider = [&]() {
        std::string candidate = detail::relabeled_serialization(h, new_label);
        if (best.empty() || candidate < best) best = std::move(candidate);
    };
    // Enumerates, class by class, every assignment of the class members onto
    // the class's block of labels.
    auto enumerate = [&](auto&& self, std::size_t class_index) -> void {
        if (class_index == class_members.size()) {
            consider();
            return;
        }
        std::vector<int> members = class_members[class_index];
        std::sort(members.begin(), members.end());
        do {
            for (std::size_t i = 0; i < members.size(); ++i)
                new_label[static_cast<std::size_t>(members[i])] =
                    offset[class_index] + static_cast<int>(i);
            self(self, class_index + 1);
        } while (std::next_permutation(members.begin(), members.end()));
    };
    if (n == 0) return detail::relabeled_serialization(h, new_label);
    enumerate(enumerate, 0);
    return best;
}

/// Stable 16-hex-digit content hash of a canonical form, used to name
/// witness files.
inline std::string canonical_hash(const std::string& canonical) {
    std::uint64_t h = detail::fnv1a(canonical);
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace bergekit
