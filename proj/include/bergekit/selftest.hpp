#pragma once

// Randomized cross-checks with a fixed, platform-independent random stream.
//
// The generator is splitmix64 driven directly (no library distributions), so
// a (seed, trial) pair denotes the same hypergraph on every toolchain and
// the suites' logs are byte-stable.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "bergekit/berge.hpp"
#include "bergekit/hypergraph.hpp"
#include "bergekit/oracle.hpp"
#include "bergekit/search.hpp"

namespace bergekit {

class Splitmix64 {
public:
    explicit Splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound); bound must be positive. Rejection keeps
    /// the draw exactly uniform.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        for (;;) {
            std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Uniformly random r-uniform hypergraph: n drawn from [r, max_n], edge
/// count from [0, min(max_m, binom(n, r))], then that many distinct edges.
inline Hypergraph random_hypergraph(Splitmix64& rng, int max_n, int r, int max_m) {
    if (r < 2 || max_n < r || max_m < 0)
        throw std::invalid_argument("random_hypergraph: need r >= 2, max_n >= r, max_m >= 0");
    int n = r + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - r) + 1));
    Integer cap = binom(n, r);
    long long edge_cap = cap > max_m ? max_m : static_cast<long long>(cap);
    long long m = static_cast<long long>(rng.below(static_cast<std::uint64_t>(edge_cap) + 1));
    std::set<Edge> edges;
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
    while (static_cast<long long>(edges.size()) < m) {
        for (int i = 0; i < r; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        }
        Edge e(pool.begin(), pool.begin() + r);
        std::sort(e.begin(), e.end());
        edges.insert(std::move(e));
    }
    return Hypergraph(n, r, std::vector<Edge>(edges.begin(), edges.end()));
}

struct SelfTestReport {
    int trials = 0;
    int failures = 0;
    std::vector<std::string> log;

    bool ok() const { return failures == 0; }
};

namespace detail {

inline std::string trial_tag(int index, const Hypergraph& h) {
    return "trial " + std::to_string(index) + " n=" + std::to_string(h.vertex_count()) +
           " m=" + std::to_string(h.edge_count());
}

}  // namespace detail

/// Pits the exhaustive searcher against naive_path_check on random
/// hypergraphs for every length in [1, max_t], and validates every
/// certificate the searcher emits. One log line per trial.
inline SelfTestReport run_oracle_agreement(int trials, std::uint64_t seed, int max_n, int r,
                                           int max_m, int max_t, int jobs = 1) {
    Splitmix64 rng(seed);
    SelfTestReport report;
    SearchLimits limits;
    limits.jobs = jobs;
    for (int trial = 0; trial < trials; ++trial) {
        Hypergraph h = random_hypergraph(rng, max_n, r, max_m);
        ++report.trials;
        std::string tag = detail::trial_tag(trial, h);
        std::string failure;
        for (int t = 1; t <= max_t && failure.empty(); ++t) {
            PathSearchOutcome fast = has_berge_path_of_length(h, t, limits);
            bool naive = naive_path_check(h, t);
            bool found = fast.status == SearchStatus::found;
            if (found != naive) {
                failure = " MISMATCH t=" + std::to_string(t) +
                          " searcher=" + (found ? "found" : "absent") +
                          " naive=" + (naive ? "found" : "absent");
                break;
            }
            if (found) {
                VerifyResult check = verify_path(h, *fast.certificate);
                if (!check.ok)
                    failure = " BAD-CERTIFICATE t=" + std::to_string(t) + " " + check.message;
                else if (fast.certificate->length() != t)
                    failure = " BAD-CERTIFICATE t=" + std::to_string(t) + " wrong length " +
                              std::to_string(fast.certificate->length());
            }
        }
        if (failure.empty()) {
            report.log.push_back(tag + " ok");
        } else {
            ++report.failures;
            report.log.push_back(tag + failure);
        }
    }
    return report;
}

/// Finds a longest Berge path in each random hypergraph, then checks that
/// every rotation of it is again a valid Berge path with the same length,
/// vertex set, and edge-index set.
inline SelfTestReport run_rotation_suite(int trials, std::uint64_t seed, int max_n, int r,
                                         int max_m) {
    Splitmix64 rng(seed);
    SelfTestReport report;
    for (int trial = 0; trial < trials; ++trial) {
        Hypergraph h = random_hypergraph(rng, max_n, r, max_m);
        ++report.trials;
        std::string tag = detail::trial_tag(trial, h);
        if (h.edge_count() == 0) {
            report.log.push_back(tag + " skipped (no edges)");
            continue;
        }
        LongestPathResult longest = longest_berge_path(h);
        if (!longest.certificate) {
            ++report.failures;
            report.log.push_back(tag + " NO-PATH despite edges");
            continue;
        }
        const BergePath& path = *longest.certificate;
        std::vector<int> base_vertices = path.vertices;
        std::vector<int> base_edges = path.edge_indexes;
        std::sort(base_vertices.begin(), base_vertices.end());
        std::sort(base_edges.begin(), base_edges.end());
        std::vector<BergePath> turns = rotations(h, path);
        std::string failure;
        for (std::size_t i = 0; i < turns.size() && failure.empty(); ++i) {
            const BergePath& turned = turns[i];
            VerifyResult check = verify_path(h, turned);
            if (!check.ok) {
                failure = " ROTATION-INVALID #" + std::to_string(i) + " " + check.message;
                break;
            }
            std::vector<int> vs = turned.vertices;
            std::vector<int> es = turned.edge_indexes;
            std::sort(vs.begin(), vs.end());
            std::sort(es.begin(), es.end());
            if (turned.length() != path.length() || vs != base_vertices || es != base_edges)
                failure = " ROTATION-DRIFT #" + std::to_string(i);
        }
        if (failure.empty()) {
            report.log.push_back(tag + " length=" + std::to_string(path.length()) +
                                 " rotations=" + std::to_string(turns.size()) + " ok");
        } else {
            ++report.failures;
            report.log.push_back(tag + failure);
        }
    }
    return report;
}

}  // namespace bergekit
