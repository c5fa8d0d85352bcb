#pragma once

// Ground truth at tiny scale.
//
// naive_path_check decides Berge-path containment by enumerating vertex
// sequences and then edge systems directly. It deliberately shares none of
// the searcher's machinery (no pair index, no matching), so agreement
// between the two is a meaningful cross-check.
//
// brute_force_ex measures the exact extremal edge count over every labeled
// r-uniform hypergraph on n vertices by walking the include/exclude tree of
// the binom(n, r) candidate edges. Adding edges never removes a Berge path,
// so any subtree whose root already contains one is skipped wholesale; a
// size bound prunes subtrees that cannot reach the best known size. The tree
// is sharded on the membership pattern of the first few candidate edges;
// shards never share state, so reports are byte-identical for any worker
// count.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bergekit/canonical.hpp"
#include "bergekit/constructions.hpp"
#include "bergekit/formulas.hpp"
#include "bergekit/hypergraph.hpp"
#include "bergekit/search.hpp"

namespace bergekit {

/// Reference decision procedure: does h contain a Berge path of length t?
/// Enumerates every sequence of t+1 distinct vertices, and for each, every
/// assignment of t distinct edges to the consecutive pairs, by plain
/// backtracking over the full edge list.
inline bool naive_path_check(const Hypergraph& h, int t) {
    if (t < 1) throw std::invalid_argument("naive_path_check: t must be >= 1, got " +
                                           std::to_string(t));
    int n = h.vertex_count();
    int m = h.edge_count();
    if (t + 1 > n || t > m) return false;
    std::vector<int> seq;
    std::vector<char> used_vertex(static_cast<std::size_t>(n), 0);
    std::vector<char> used_edge(static_cast<std::size_t>(m), 0);

    auto assign_edges = [&](auto&& self, int slot) -> bool {
        if (slot == t) return true;
        for (int e = 0; e < m; ++e) {
            if (used_edge[static_cast<std::size_t>(e)]) continue;
            if (!h.edge_contains(e, seq[static_cast<std::size_t>(slot)]) ||
                !h.edge_contains(e, seq[static_cast<std::size_t>(slot) + 1]))
                continue;
            used_edge[static_cast<std::size_t>(e)] = 1;
            if (self(self, slot + 1)) return true;
            used_edge[static_cast<std::size_t>(e)] = 0;
        }
        return false;
    };
    auto place = [&](auto&& self) -> bool {
        if (static_cast<int>(seq.size()) == t + 1) return assign_edges(assign_edges, 0);
        for (int v = 0; v < n; ++v) {
            if (used_vertex[static_cast<std::size_t>(v)]) continue;
            used_vertex[static_cast<std::size_t>(v)] = 1;
            seq.push_back(v);
            if (self(self)) return true;
            seq.pop_back();
            used_vertex[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    return place(place);
}

struct BruteForceReport {
    int n = 0;
    int k = 0;
    int r = 0;
    bool connected_only = false;
    /// Largest edge count among qualifying hypergraphs; 0 when none
    /// qualifies (see any_qualifying).
    int max_edges = 0;
    bool any_qualifying = false;
    /// Canonical forms of the isomorphism classes attaining max_edges,
    /// sorted bytewise.
    std::vector<std::string> witness_forms;
    /// Number of subset tests performed (shards retest their shared
    /// prefixes, so this measures work, not distinct subsets).
    std::uint64_t total_scanned = 0;
    /// False when a budget stopped the scan early; the report is then a
    /// lower-bound sketch, not a measurement.
    bool authoritative = true;
    double elapsed_seconds = 0.0;

    int witness_classes() const { return static_cast<int>(witness_forms.size()); }
};

namespace detail {

struct ShardScan {
    int best = -1;  // largest qualifying free size seen, -1 when none
    std::map<int, std::set<std::string>> forms;
    std::uint64_t tests = 0;
    bool truncated = false;
};

class BruteForceScanner {
public:
    BruteForceScanner(int n, int k, int r, bool connected_only, const std::vector<Edge>& candidates,
                      std::uint64_t test_budget, std::chrono::steady_clock::time_point deadline,
                      bool has_deadline)
        : n_(n),
          k_(k),
          r_(r),
          connected_only_(connected_only),
          candidates_(candidates),
          test_budget_(test_budget),
          deadline_(deadline),
          has_deadline_(has_deadline) {}

    ShardScan run(std::uint32_t pattern, int pattern_bits) {
        scan_ = ShardScan{};
        chosen_.clear();
        // Forced decisions for the sharded prefix; a path inside the prefix
        // kills the whole shard, exactly as the sequential walk would.
        for (int j = 0; j < pattern_bits; ++j) {
            if ((pattern >> j & 1u) == 0) continue;
            if (!try_include(j)) return scan_;
            if (scan_.truncated) return scan_;
        }
        dfs(pattern_bits);
        return scan_;
    }

private:
    // Tests chosen_ + candidate j; on a free result records it and keeps it
    // chosen (returns true). Returns false when the grown set has a path.
    bool try_include(int j) {
        if (scan_.tests >= test_budget_ ||
            (has_deadline_ && (scan_.tests & 0x3f) == 0 &&
             std::chrono::steady_clock::now() > deadline_)) {
            scan_.truncated = true;
            return false;
        }
        ++scan_.tests;
        chosen_.push_back(j);
        Hypergraph grown = materialize();
        bool has_path = static_cast<int>(chosen_.size()) >= k_ &&
                        has_berge_path_of_length(grown, k_).status == SearchStatus::found;
        if (has_path) {
            chosen_.pop_back();
            return false;
        }
        int size = static_cast<int>(chosen_.size());
        if (size >= scan_.best && qualifies(grown)) {
            scan_.best = size;
            scan_.forms[size].insert(canonical_form(grown));
        }
        return true;
    }

    void dfs(int idx) {
        if (scan_.truncated) return;
        int total = static_cast<int>(candidates_.size());
        if (idx == total) return;
        // Even taking every remaining candidate cannot reach the best known
        // size: nothing new below here.
        if (static_cast<int>(chosen_.size()) + (total - idx) < scan_.best) return;
        if (try_include(idx)) {
            dfs(idx + 1);
            chosen_.pop_back();
        }
        if (scan_.truncated) return;
        dfs(idx + 1);
    }

    bool qualifies(const Hypergraph& h) const { return !connected_only_ || is_connected(h); }

    Hypergraph materialize() const {
        std::vector<Edge> edges;
        edges.reserve(chosen_.size());
        for (int j : chosen_) edges.push_back(candidates_[static_cast<std::size_t>(j)]);
        return Hypergraph(n_, r_, std::move(edges));
    }

    int n_, k_, r_;
    bool connected_only_;
    const std::vector<Edge>& candidates_;
    std::uint64_t test_budget_;
    std::chrono::steady_clock::time_point deadline_;
    bool has_deadline_;
    ShardScan scan_;
    std::vector<int> chosen_;
};

}  // namespace detail

/// Exact extremal edge count over all (or all connected) labeled r-uniform
/// hypergraphs on n vertices containing no Berge path of length k. Intended
/// for tiny cells (about n <= 6 at r = 3, n <= 8 at r = 2); the budget in
/// limits caps the number of subset tests and flags the report
/// non-authoritative when it trips. Witness classes are verified post hoc
/// against the exhaustive searcher.
inline BruteForceReport brute_force_ex(int n, int k, int r, bool connected_only,
                                       const SearchLimits& limits = {}) {
    if (n < 0 || r < 2 || k < 1)
        throw std::invalid_argument("brute_force_ex: need n >= 0, r >= 2, k >= 1");
    auto started = std::chrono::steady_clock::now();
    BruteForceReport report;
    report.n = n;
    report.k = k;
    report.r = r;
    report.connected_only = connected_only;

    std::vector<Edge> candidates;
    if (n >= r) candidates = build_complete(n, r).edges();
    int total = static_cast<int>(candidates.size());
    // Shard count is fixed by the instance, never by the worker count, so
    // per-shard pruning and counters evolve identically on every run.
    int pattern_bits = total < 6 ? total : 6;
    std::uint32_t shard_count = 1u << pattern_bits;

    std::uint64_t per_shard = limits.max_nodes;
    if (per_shard != std::numeric_limits<std::uint64_t>::max())
        per_shard = per_shard / shard_count ? per_shard / shard_count : 1;
    auto deadline = std::chrono::steady_clock::time_point::max();
    bool has_deadline = limits.time_limit_seconds > 0;
    if (has_deadline)
        deadline = started + std::chrono::microseconds(
                                 static_cast<std::int64_t>(limits.time_limit_seconds * 1e6));

    std::vector<detail::ShardScan> scans(shard_count);
    std::atomic<std::uint32_t> next{0};
    auto worker = [&]() {
        detail::BruteForceScanner scanner(n, k, r, connected_only, candidates, per_shard, deadline,
                                          has_deadline);
        for (;;) {
            std::uint32_t shard = next.fetch_add(1, std::memory_order_relaxed);
            if (shard >= shard_count) return;
            scans[shard] = scanner.run(shard, pattern_bits);
        }
    };
    int jobs = limits.jobs < 1 ? 1 : limits.jobs;
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // The empty edge set is the one subset never reached by an include step.
    Hypergraph empty(n, r, {});
    int best = -1;
    std::set<std::string> best_forms;
    if (!connected_only || is_connected(empty)) {
        best = 0;
        best_forms.insert(canonical_form(empty));
    }
    report.total_scanned = 1;
    for (const detail::ShardScan& scan : scans) {
        report.total_scanned += scan.tests;
        if (scan.truncated) report.authoritative = false;
        if (scan.best > best) {
            best = scan.best;
            best_forms.clear();
        }
        if (scan.best == best && best >= 0) {
            auto it = scan.forms.find(best);
            if (it != scan.forms.end()) best_forms.insert(it->second.begin(), it->second.end());
        }
    }
    report.any_qualifying = best >= 0;
    report.max_edges = best > 0 ? best : 0;
    report.witness_forms.assign(best_forms.begin(), best_forms.end());
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    if (report.authoritative) {
        for (const std::string& form : report.witness_forms) {
            std::istringstream in(form);
            Hypergraph witness = read_hypergraph(in, "<witness>").graph;
            if (witness.edge_count() != report.max_edges)
                throw std::logic_error("brute_force_ex: witness edge count mismatch");
            if (connected_only && !is_connected(witness))
                throw std::logic_error("brute_force_ex: witness not connected");
            if (witness.edge_count() >= k &&
                has_berge_path_of_length(witness, k).status != SearchStatus::exhausted_not_found)
                throw std::logic_error("brute_force_ex: witness contains the forbidden path");
        }
    }
    return report;
}

/// One summary line of a brute-force cell: the measurement next to the
/// matching formula. equal is "yes", "no", or "DISCREPANCY" when a proven
/// statement disagrees with the measurement.
struct SweepRow {
    int n = 0, k = 0, r = 0;
    bool connected = false;
    int max_edges = 0;
    int witness_classes = 0;
    std::string formula_name;
    Integer formula_value = 0;
    bool hypothesis_ok = false;
    std::string equal;
};

inline SweepRow summarize_cell(const BruteForceReport& report) {
    SweepRow row;
    row.n = report.n;
    row.k = report.k;
    row.r = report.r;
    row.connected = report.connected_only;
    row.max_edges = report.max_edges;
    row.witness_classes = report.witness_classes();
    Integer measured = report.max_edges;
    bool discrepancy = false;
    if (report.connected_only) {
        BoundValue formula = extremal_count(report.n, report.k, report.r);
        row.formula_name = "extremal_count";
        row.formula_value = formula.value;
        row.hypothesis_ok = formula.hypothesis_ok;
        if (formula.hypothesis_ok && report.authoritative && measured != formula.value)
            discrepancy = true;
    } else {
        BoundValue bound = gkl_bound(report.n, report.k, report.r);
        row.formula_name = bound.regime.empty() ? "none" : bound.regime;
        row.formula_value = bound.value;
        row.hypothesis_ok = bound.hypothesis_ok;
        if (bound.hypothesis_ok && report.authoritative) {
            if (measured > bound.value) discrepancy = true;
            // Tightness direction, where the equality characterization is
            // proven: gkl1 everywhere in its regime, gkl2 above the solved
            // boundary cases.
            bool divides = bound.rational_num % bound.rational_den == 0 &&
                           (row.formula_name == "gkl1" ? report.n % (report.r + 1) == 0
                                                       : report.n % report.k == 0);
            bool tightness_known =
                row.formula_name == "gkl1" ||
                (row.formula_name == "gkl2" && report.k > report.r + 1 && report.r > 2);
            if (tightness_known) {
                if (divides && measured * bound.rational_den != bound.rational_num)
                    discrepancy = true;
                if (!divides && measured * bound.rational_den >= bound.rational_num)
                    discrepancy = true;
            }
        }
    }
    row.equal = discrepancy ? "DISCREPANCY" : (measured == row.formula_value ? "yes" : "no");
    return row;
}

inline std::string sweep_tsv_header() {
    return "n\tk\tr\tconnected\tmax_edges\tnum_witness_classes\tformula_name\tformula_value\t"
           "hypothesis_ok\tequal\n";
}

inline std::string to_tsv(const SweepRow& row) {
    std::string out;
    out += std::to_string(row.n) + "\t" + std::to_string(row.k) + "\t" + std::to_string(row.r) +
           "\t" + (row.connected ? "true" : "false") + "\t" + std::to_string(row.max_edges) +
           "\t" + std::to_string(row.witness_classes) + "\t" + row.formula_name + "\t" +
           row.formula_value.str() + "\t" + (row.hypothesis_ok ? "true" : "false") + "\t" +
           row.equal + "\n";
    return out;
}

struct SweepGrid {
    int n_lo = 0, n_hi = 0;  // inclusive
    int k_lo = 0, k_hi = 0;  // inclusive
    std::vector<int> rs;
    bool both_flags = true;  // run connected_only in {false, true}; false: only false
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool any_discrepancy = false;
    std::string tsv;
};

/// Runs brute_force_ex over the grid, collects the summary table, and (when
/// out_dir is nonempty) writes summary.tsv plus one hypergraph file per
/// witness class, named by the canonical-form hash.
inline SweepResult sweep(const SweepGrid& grid, const std::string& out_dir,
                         const SearchLimits& limits = {}) {
    SweepResult result;
    result.tsv = sweep_tsv_header();
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    std::vector<bool> flags = grid.both_flags ? std::vector<bool>{false, true}
                                              : std::vector<bool>{false};
    for (int n = grid.n_lo; n <= grid.n_hi; ++n)
        for (int k = grid.k_lo; k <= grid.k_hi; ++k)
            for (int r : grid.rs)
                for (bool flag : flags) {
                    BruteForceReport report = brute_force_ex(n, k, r, flag, limits);
                    SweepRow row = summarize_cell(report);
                    result.rows.push_back(row);
                    result.tsv += to_tsv(row);
                    if (row.equal == "DISCREPANCY") result.any_discrepancy = true;
                    if (!out_dir.empty()) {
                        for (const std::string& form : report.witness_forms) {
                            std::string path = out_dir + "/" + canonical_hash(form) + ".txt";
                            std::ofstream out(path, std::ios::binary);
                            out << form;
                        }
                    }
                }
    if (!out_dir.empty()) {
        std::ofstream out(out_dir + "/summary.tsv", std::ios::binary);
        out << result.tsv;
    }
    return result;
}

}  // namespace bergekit
