#pragma once

// Exact decision procedures for Berge paths and cycles at desk scale.
//
// The searcher runs a DFS over vertex sequences. The edge side is never
// enumerated directly: a partial sequence u_1..u_j is viable exactly when
// the j-1 consecutive pairs can be matched to distinct edges, so the DFS
// keeps an incremental bipartite matching (slots = consecutive pairs,
// candidates = edges containing the pair) and extends it by one augmenting
// path per placed vertex. Failure to augment prunes the subtree; a sequence
// of full length together with the matching is a certificate.
//
// Determinism contract: results never depend on the worker count. The search
// tree splits at its root branches into an ordered task list; a task may be
// skipped or aborted only when a smaller-indexed task has already found a
// certificate, so the smallest finding task is invariant, and the returned
// certificate is always that task's first find (its DFS visits candidates in
// ascending vertex order). Node budgets are divided evenly across tasks so
// that budget verdicts are timing-independent as well; wall-clock limits are
// inherently racy and are the one knob that can change outcomes between
// runs.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "bergekit/berge.hpp"
#include "bergekit/hypergraph.hpp"

namespace bergekit {

enum class SearchStatus {
    found,
    exhausted_not_found,  // the full space was covered; absence is proven
    budget_exceeded       // stopped early; absence is NOT proven
};

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted_not_found: return "exhausted-not-found";
        case SearchStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

struct SearchLimits {
    /// Node budget for the whole call, split evenly across root tasks.
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    /// Wall-clock limit in seconds; 0 or negative means unlimited. Checked
    /// every 4096 nodes. Unlike the node budget this is not deterministic.
    double time_limit_seconds = 0.0;
    /// Worker threads. Affects runtime only, never any result.
    int jobs = 1;
};

template <class Cert>
struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted_not_found;
    std::optional<Cert> certificate;
    std::uint64_t nodes_expanded = 0;
};

using PathSearchOutcome = SearchOutcome<BergePath>;
using CycleSearchOutcome = SearchOutcome<BergeCycle>;

namespace detail {

/// Edge ids containing a given vertex pair, ascending. Dense table for small
/// universes, hashed otherwise.
class PairIndex {
public:
    explicit PairIndex(const Hypergraph& h) : n_(h.vertex_count()), dense_(n_ <= 512) {
        if (dense_) table_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), {});
        const auto& edges = h.edges();
        for (std::size_t id = 0; id < edges.size(); ++id) {
            const Edge& e = edges[id];
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = i + 1; j < e.size(); ++j)
                    bucket(e[i], e[j]).push_back(static_cast<int>(id));
        }
    }

    const std::vector<int>& candidates(int u, int v) const {
        if (u > v) std::swap(u, v);
        if (dense_) return table_[key(u, v)];
        auto it = sparse_.find(key(u, v));
        return it == sparse_.end() ? empty_ : it->second;
    }

private:
    std::size_t key(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }
    std::vector<int>& bucket(int u, int v) {
        if (u > v) std::swap(u, v);
        if (dense_) return table_[key(u, v)];
        return sparse_[key(u, v)];
    }

    int n_;
    bool dense_;
    std::vector<std::vector<int>> table_;
    std::unordered_map<std::size_t, std::vector<int>> sparse_;
    std::vector<int> empty_;
};

/// Incremental bipartite matching between path slots and edges, with exact
/// rollback. push_slot appends a slot for the pair (u, v) and tries one
/// augmenting pass; on failure the matching is untouched and false comes
/// back. pop_slot undoes the most recent successful push completely.
class SlotMatcher {
public:
    SlotMatcher(const PairIndex& pairs, int edge_count)
        : pairs_(pairs),
          edge_owner_(static_cast<std::size_t>(edge_count), -1),
          visit_stamp_(static_cast<std::size_t>(edge_count), 0) {}

    bool push_slot(int u, int v) {
        slot_pairs_.emplace_back(u, v);
        slot_edge_.push_back(-1);
        std::size_t log_start = log_.size();
        ++stamp_;
        if (augment(static_cast<int>(slot_pairs_.size()) - 1)) {
            log_marks_.push_back(log_start);
            return true;
        }
        slot_pairs_.pop_back();
        slot_edge_.pop_back();
        return false;
    }

    void pop_slot() {
        std::size_t log_start = log_marks_.back();
        log_marks_.pop_back();
        while (log_.size() > log_start) {
            const Move& m = log_.back();
            slot_edge_[static_cast<std::size_t>(m.slot)] = m.old_edge;
            edge_owner_[static_cast<std::size_t>(m.new_edge)] = -1;
            if (m.old_edge >= 0) edge_owner_[static_cast<std::size_t>(m.old_edge)] = m.slot;
            log_.pop_back();
        }
        slot_pairs_.pop_back();
        slot_edge_.pop_back();
    }

    int slot_count() const { return static_cast<int>(slot_pairs_.size()); }

    /// Slot-by-slot edge assignment, in slot push order.
    std::vector<int> assignment() const { return slot_edge_; }

private:
    struct Move {
        int slot;
        int old_edge;
        int new_edge;
    };

    bool augment(int slot) {
        const auto& pair = slot_pairs_[static_cast<std::size_t>(slot)];
        for (int e : pairs_.candidates(pair.first, pair.second)) {
            if (visit_stamp_[static_cast<std::size_t>(e)] == stamp_) continue;
            visit_stamp_[static_cast<std::size_t>(e)] = stamp_;
            int owner = edge_owner_[static_cast<std::size_t>(e)];
            if (owner < 0 || augment(owner)) {
                log_.push_back(Move{slot, slot_edge_[static_cast<std::size_t>(slot)], e});
                slot_edge_[static_cast<std::size_t>(slot)] = e;
                edge_owner_[static_cast<std::size_t>(e)] = slot;
                return true;
            }
        }
        return false;
    }

    const PairIndex& pairs_;
    std::vector<int> edge_owner_;
    std::vector<std::pair<int, int>> slot_pairs_;
    std::vector<int> slot_edge_;
    std::vector<std::uint64_t> visit_stamp_;
    std::uint64_t stamp_ = 0;
    std::vector<Move> log_;
    std::vector<std::size_t> log_marks_;
};

/// Per-task stop conditions. A task stops for its own node budget or the
/// shared deadline (budget_hit), or because a smaller-indexed task has found
/// a certificate (aborted; irrelevant to the merged verdict).
struct TaskControl {
    std::uint64_t node_limit;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline;
    std::atomic<int>* min_found;
    int task_index;

    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool aborted = false;

    bool tick() {
        ++nodes;
        if (nodes > node_limit) {
            budget_hit = true;
            return true;
        }
        if ((nodes & 0xfffULL) == 0) {
            if (has_deadline && std::chrono::steady_clock::now() > deadline) {
                budget_hit = true;
                return true;
            }
            if (min_found->load(std::memory_order_relaxed) < task_index) {
                aborted = true;
                return true;
            }
        }
        return false;
    }

    bool stopped() const { return budget_hit || aborted; }
};

template <class Cert>
struct TaskResult {
    bool ran = false;
    std::optional<Cert> certificate;
    bool budget_hit = false;
    std::uint64_t nodes = 0;
};

inline void note_found(std::atomic<int>& min_found, int index) {
    int prev = min_found.load(std::memory_order_relaxed);
    while (index < prev && !min_found.compare_exchange_weak(prev, index)) {
    }
}

/// Runs tasks 0..task_count-1 with the given worker count. A task is skipped
/// when a smaller-indexed task has already found; runner(i, control) must
/// call note_found on success. Results are merged by the caller.
template <class Cert, class Runner>
inline std::vector<TaskResult<Cert>> run_ordered_tasks(int task_count, const SearchLimits& limits,
                                                       std::atomic<int>& min_found,
                                                       Runner&& runner) {
    std::vector<TaskResult<Cert>> results(static_cast<std::size_t>(task_count));
    std::uint64_t per_task = limits.max_nodes;
    if (per_task != std::numeric_limits<std::uint64_t>::max() && task_count > 1) {
        per_task = per_task / static_cast<std::uint64_t>(task_count);
        if (per_task == 0) per_task = 1;
    }
    auto deadline = std::chrono::steady_clock::time_point::max();
    bool has_deadline = limits.time_limit_seconds > 0;
    if (has_deadline)
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::microseconds(static_cast<std::int64_t>(limits.time_limit_seconds * 1e6));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= task_count) return;
            if (min_found.load(std::memory_order_relaxed) < i) continue;
            TaskControl control{per_task, deadline, has_deadline, &min_found, i};
            results[static_cast<std::size_t>(i)].certificate = runner(i, control);
            results[static_cast<std::size_t>(i)].ran = true;
            results[static_cast<std::size_t>(i)].budget_hit = control.budget_hit;
            results[static_cast<std::size_t>(i)].nodes = control.nodes;
            if (results[static_cast<std::size_t>(i)].certificate) note_found(min_found, i);
        }
    };
    int jobs = limits.jobs < 1 ? 1 : limits.jobs;
    if (jobs > task_count) jobs = task_count;
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return results;
}

/// Merges ordered task results: the smallest finding task wins; with no find,
/// any true budget stop (not an abort) makes the verdict budget_exceeded.
template <class Cert>
inline SearchOutcome<Cert> merge_task_results(std::vector<TaskResult<Cert>>& results) {
    SearchOutcome<Cert> out;
    for (auto& r : results) out.nodes_expanded += r.nodes;
    for (auto& r : results) {
        if (r.ran && r.certificate) {
            out.status = SearchStatus::found;
            out.certificate = std::move(r.certificate);
            return out;
        }
    }
    for (auto& r : results) {
        if (r.ran && r.budget_hit) {
            out.status = SearchStatus::budget_exceeded;
            return out;
        }
    }
    out.status = SearchStatus::exhausted_not_found;
    return out;
}

class PathDfs {
public:
    PathDfs(const Hypergraph& h, const PairIndex& pairs, int t, TaskControl& control)
        : h_(h),
          pairs_(pairs),
          t_(t),
          control_(control),
          matcher_(pairs, h.edge_count()),
          used_(static_cast<std::size_t>(h.vertex_count()), 0) {}

    std::optional<BergePath> run(int first_vertex) {
        if (control_.tick()) return std::nullopt;
        used_[static_cast<std::size_t>(first_vertex)] = 1;
        seq_.push_back(first_vertex);
        auto found = extend();
        seq_.pop_back();
        used_[static_cast<std::size_t>(first_vertex)] = 0;
        return found;
    }

private:
    std::optional<BergePath> extend() {
        if (static_cast<int>(seq_.size()) == t_ + 1)
            return BergePath{seq_, matcher_.assignment()};
        int u = seq_.back();
        // The reverse of a Berge path is one too, so only sequences whose
        // final vertex exceeds the first are explored.
        bool placing_last = static_cast<int>(seq_.size()) == t_;
        for (int v = 0; v < h_.vertex_count(); ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            if (placing_last && v < seq_.front()) continue;
            if (!matcher_.push_slot(u, v)) continue;
            if (control_.tick()) {
                matcher_.pop_slot();
                return std::nullopt;
            }
            used_[static_cast<std::size_t>(v)] = 1;
            seq_.push_back(v);
            auto found = extend();
            seq_.pop_back();
            used_[static_cast<std::size_t>(v)] = 0;
            matcher_.pop_slot();
            if (found) return found;
            if (control_.stopped()) return std::nullopt;
        }
        return std::nullopt;
    }

    const Hypergraph& h_;
    const PairIndex& pairs_;
    int t_;
    TaskControl& control_;
    SlotMatcher matcher_;
    std::vector<char> used_;
    std::vector<int> seq_;
};

class CycleDfs {
public:
    CycleDfs(const Hypergraph& h, const PairIndex& pairs, int length, TaskControl& control)
        : h_(h),
          pairs_(pairs),
          s_(length),
          control_(control),
          matcher_(pairs, h.edge_count()),
          used_(static_cast<std::size_t>(h.vertex_count()), 0) {}

    /// first_vertex is canonically the smallest vertex of the cycle, so the
    /// remaining ones are drawn from the ids above it.
    std::optional<BergeCycle> run(int first_vertex) {
        if (first_vertex + s_ > h_.vertex_count()) return std::nullopt;
        if (control_.tick()) return std::nullopt;
        first_ = first_vertex;
        used_[static_cast<std::size_t>(first_vertex)] = 1;
        seq_.push_back(first_vertex);
        auto found = extend();
        seq_.pop_back();
        used_[static_cast<std::size_t>(first_vertex)] = 0;
        return found;
    }

private:
    std::optional<BergeCycle> extend() {
        if (static_cast<int>(seq_.size()) == s_) {
            // Close the cycle with the wraparound slot.
            if (!matcher_.push_slot(seq_.back(), seq_.front())) return std::nullopt;
            BergeCycle cycle{seq_, matcher_.assignment()};
            matcher_.pop_slot();
            return cycle;
        }
        int u = seq_.back();
        // Reflection symmetry: for s >= 3 require the last vertex to exceed
        // the second, so each cyclic sequence is traversed once per rotation
        // class and direction.
        bool placing_last = static_cast<int>(seq_.size()) == s_ - 1;
        for (int v = first_ + 1; v < h_.vertex_count(); ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            if (placing_last && s_ >= 3 && v < seq_[1]) continue;
            if (!matcher_.push_slot(u, v)) continue;
            if (control_.tick()) {
                matcher_.pop_slot();
                return std::nullopt;
            }
            used_[static_cast<std::size_t>(v)] = 1;
            seq_.push_back(v);
            auto found = extend();
            seq_.pop_back();
            used_[static_cast<std::size_t>(v)] = 0;
            matcher_.pop_slot();
            if (found) return found;
            if (control_.stopped()) return std::nullopt;
        }
        return std::nullopt;
    }

    const Hypergraph& h_;
    const PairIndex& pairs_;
    int s_;
    TaskControl& control_;
    SlotMatcher matcher_;
    std::vector<char> used_;
    std::vector<int> seq_;
    int first_ = 0;
};

}  // namespace detail

/// Decides whether the hypergraph contains a Berge path of length exactly t
/// (equivalently, of length at least t: prefixes of longer paths qualify).
/// exhausted_not_found proves absence; budget_exceeded proves nothing.
inline PathSearchOutcome has_berge_path_of_length(const Hypergraph& h, int t,
                                                  const SearchLimits& limits = {}) {
    if (t < 1) throw std::invalid_argument("has_berge_path_of_length: t must be >= 1, got " +
                                           std::to_string(t));
    PathSearchOutcome out;
    if (t + 1 > h.vertex_count() || t > h.edge_count()) return out;  // exhausted, zero nodes
    detail::PairIndex pairs(h);
    std::atomic<int> min_found{std::numeric_limits<int>::max()};
    auto results = detail::run_ordered_tasks<BergePath>(
        h.vertex_count(), limits, min_found,
        [&](int task, detail::TaskControl& control) -> std::optional<BergePath> {
            detail::PathDfs dfs(h, pairs, t, control);
            return dfs.run(task);
        });
    return detail::merge_task_results(results);
}

/// Decides whether the hypergraph contains a Berge cycle of length at least
/// t (t >= 2). Cycle containment is not monotone in the length, so every
/// target length from t through min(n, m) is tried.
inline CycleSearchOutcome has_berge_cycle_of_length_at_least(const Hypergraph& h, int t,
                                                             const SearchLimits& limits = {}) {
    if (t < 2) throw std::invalid_argument(
        "has_berge_cycle_of_length_at_least: t must be >= 2, got " + std::to_string(t));
    CycleSearchOutcome out;
    int n = h.vertex_count();
    int longest = n < h.edge_count() ? n : h.edge_count();
    if (t > longest) return out;
    detail::PairIndex pairs(h);
    std::atomic<int> min_found{std::numeric_limits<int>::max()};
    int lengths = longest - t + 1;
    auto results = detail::run_ordered_tasks<BergeCycle>(
        lengths * n, limits, min_found,
        [&](int task, detail::TaskControl& control) -> std::optional<BergeCycle> {
            int s = t + task / n;
            int first_vertex = task % n;
            detail::CycleDfs dfs(h, pairs, s, control);
            return dfs.run(first_vertex);
        });
    return detail::merge_task_results(results);
}

struct LongestPathResult {
    /// A longest (when proven_maximal) or best known Berge path; absent only
    /// when the hypergraph has no edges at all.
    std::optional<BergePath> certificate;
    int length = 0;
    bool proven_maximal = false;
    SearchStatus status = SearchStatus::exhausted_not_found;
    std::uint64_t nodes_expanded = 0;
};

/// Longest Berge path, warm-started by extend_or_rotate from the first edge
/// and finished by exact searches of increasing length. Path containment is
/// monotone in the length, so the first exhausted length settles optimality.
inline LongestPathResult longest_berge_path(const Hypergraph& h, const SearchLimits& limits = {}) {
    LongestPathResult out;
    if (h.edge_count() == 0) {
        out.proven_maximal = true;  // vacuously: no edge means no path
        return out;
    }
    const Edge& seed_edge = h.edge(0);
    BergePath seed{{seed_edge[0], seed_edge[1]}, {0}};
    BergePath best = extend_or_rotate(h, seed);
    out.certificate = best;
    out.length = best.length();
    out.status = SearchStatus::found;
    int ceiling = h.vertex_count() - 1 < h.edge_count() ? h.vertex_count() - 1 : h.edge_count();
    for (int t = best.length() + 1; t <= ceiling; ++t) {
        PathSearchOutcome step = has_berge_path_of_length(h, t, limits);
        out.nodes_expanded += step.nodes_expanded;
        if (step.status == SearchStatus::found) {
            out.certificate = std::move(step.certificate);
            out.length = t;
            continue;
        }
        if (step.status == SearchStatus::exhausted_not_found) {
            out.proven_maximal = true;
            return out;
        }
        out.status = SearchStatus::budget_exceeded;
        return out;
    }
    out.proven_maximal = true;  // the ceiling min(n-1, m) cannot be exceeded
    return out;
}

}  // namespace bergekit
