// bergekit — construct, count, search, and brute-force r-uniform
// hypergraphs with respect to Berge paths and Berge cycles.
//
// Exit codes across all subcommands:
//   0  success (object found, certificate valid, all checks passed)
//   1  definite negative (nothing found, certificate invalid, check failed)
//   2  usage or input error
//   3  a search budget expired before the question was settled
//
// Results meant for consumption go to stdout; progress and diagnostics go
// to stderr. Node counters are printed only to stderr: with several worker
// threads the point at which a losing task notices a winner depends on
// scheduling, so counters are not part of the stable report.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "bergekit/berge.hpp"
#include "bergekit/canonical.hpp"
#include "bergekit/constructions.hpp"
#include "bergekit/formulas.hpp"
#include "bergekit/hypergraph.hpp"
#include "bergekit/io.hpp"
#include "bergekit/oracle.hpp"
#include "bergekit/search.hpp"
#include "bergekit/selftest.hpp"

namespace {

using namespace bergekit;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

HypergraphFile load_hypergraph(const std::string& path) {
    if (path == "-") return read_hypergraph(std::cin, "<stdin>");
    return read_hypergraph_path(path);
}

void emit_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string bound_row(const std::string& name, const BoundValue& bound, bool verbose = false) {
    std::string row = name + "\t" + bound.value.str() + "\t" + to_string(bound.exactness) + "\t" +
                      (bound.hypothesis_ok ? "true" : "false") + "\t" +
                      (bound.regime.empty() ? "-" : bound.regime);
    if (verbose) row += "\t" + bound.rational_num.str() + "/" + bound.rational_den.str();
    return row + "\n";
}

// ---- construct ----------------------------------------------------------

struct ConstructArgs {
    std::string family;
    int n = 0, k = 0, r = 0;
    std::string output = "-";
};

int run_construct(const ConstructArgs& args) {
    std::string text;
    if (args.family == "extremal") {
        ExtremalConstruction built = build_extremal(args.n, args.k, args.r);
        text = partition_comment(built) + "\n" + serialize(built.graph);
    } else if (args.family == "complete") {
        text = serialize(build_complete(args.n, args.r));
    } else if (args.family == "gkl1") {
        text = serialize(build_gkl1(args.n, args.k, args.r));
    } else if (args.family == "tree-like" || args.family == "tree") {
        text = serialize(build_tree_like(args.n, args.k, args.r));
    } else if (args.family == "union") {
        text = serialize(build_block_union(args.n, args.k, args.r));
    } else {
        throw CLI::ValidationError("--family",
                                   "unknown family (want extremal|complete|gkl1|tree-like|union)");
    }
    emit_text(args.output, text);
    return kExitFound;
}

// ---- count / bounds -----------------------------------------------------

struct CountArgs {
    int n = 0, k = 0, r = 0;
    int a = -1;  // core size for f_star; derived from k when negative
    bool verbose = false;
};

std::string integer_row(const std::string& name, const Integer& value, const std::string& regime,
                        bool verbose) {
    std::string row = name + "\t" + value.str() + "\texact-formula\ttrue\t" + regime;
    if (verbose) row += "\t" + value.str() + "/1";
    return row + "\n";
}

int run_count(const CountArgs& args) {
    int a = args.a >= 0 ? args.a : derived_core_size(args.k);
    BoundValue count = extremal_count(args.n, args.k, args.r);
    std::string out;
    out += bound_row("extremal_count", count, args.verbose);
    out += integer_row("threshold_N", threshold_N(args.k, args.r), "-", args.verbose);
    out += integer_row("f_star", f_star(args.n, args.k, args.r, a), "a=" + std::to_string(a),
                       args.verbose);
    std::cout << out;
    return kExitFound;
}

int run_bounds(const CountArgs& args) {
    std::string out;
    out += bound_row("eg_path_bound", eg_path_bound(args.n, args.k), args.verbose);
    out += bound_row("eg_cycle_bound", eg_cycle_bound(args.n, args.k), args.verbose);
    out += bound_row("gkl_bound", gkl_bound(args.n, args.k, args.r), args.verbose);
    out += bound_row("fkl_cycle_bound", fkl_cycle_bound(args.n, args.k, args.r), args.verbose);
    if (args.a >= 0)
        out += integer_row("f_star", f_star(args.n, args.k, args.r, args.a),
                           "a=" + std::to_string(args.a), args.verbose);
    std::cout << out;
    return kExitFound;
}

// ---- search -------------------------------------------------------------

struct SearchArgs {
    std::string input = "-";
    int path_length = 0;
    int cycle_length = 0;
    bool longest = false;
    std::string certificate_path;
    SearchLimits limits;
};

void note_nodes(std::uint64_t nodes) {
    std::cerr << "nodes expanded: " << nodes << " (diagnostic only)\n";
}

int finish_search(SearchStatus status, const std::optional<Certificate>& certificate,
                  const SearchArgs& args) {
    std::cout << "status=" << to_string(status) << "\n";
    if (certificate) {
        std::string text = serialize(*certificate);
        std::cout << text;
        if (!args.certificate_path.empty()) emit_text(args.certificate_path, text);
    }
    switch (status) {
        case SearchStatus::found: return kExitFound;
        case SearchStatus::exhausted_not_found: return kExitNotFound;
        case SearchStatus::budget_exceeded: return kExitBudget;
    }
    return kExitUsage;
}

int run_search(const SearchArgs& args) {
    Hypergraph h = load_hypergraph(args.input).graph;
    if (args.longest) {
        LongestPathResult longest = longest_berge_path(h, args.limits);
        note_nodes(longest.nodes_expanded);
        std::cout << "length=" << longest.length << "\n"
                  << "proven=" << (longest.proven_maximal ? "true" : "false") << "\n";
        std::optional<Certificate> cert;
        if (longest.certificate) cert = *longest.certificate;
        if (cert) {
            std::string text = serialize(*cert);
            std::cout << text;
            if (!args.certificate_path.empty()) emit_text(args.certificate_path, text);
        }
        return longest.proven_maximal ? kExitFound : kExitBudget;
    }
    if (args.path_length > 0) {
        PathSearchOutcome outcome = has_berge_path_of_length(h, args.path_length, args.limits);
        note_nodes(outcome.nodes_expanded);
        std::optional<Certificate> cert;
        if (outcome.certificate) cert = *outcome.certificate;
        return finish_search(outcome.status, cert, args);
    }
    CycleSearchOutcome outcome =
        has_berge_cycle_of_length_at_least(h, args.cycle_length, args.limits);
    note_nodes(outcome.nodes_expanded);
    std::optional<Certificate> cert;
    if (outcome.certificate) cert = *outcome.certificate;
    return finish_search(outcome.status, cert, args);
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
    std::string input = "-";
    std::string certificate_path;
};

int run_verify(const VerifyArgs& args) {
    Hypergraph h = load_hypergraph(args.input).graph;
    Certificate certificate = read_certificate_path(args.certificate_path);
    VerifyResult result;
    std::string kind;
    int length = 0;
    if (const BergePath* path = std::get_if<BergePath>(&certificate)) {
        result = verify_path(h, *path);
        kind = "path";
        length = path->length();
    } else {
        const BergeCycle& cycle = std::get<BergeCycle>(certificate);
        result = verify_cycle(h, cycle);
        kind = "cycle";
        length = cycle.length();
    }
    if (result.ok) {
        std::cout << "VALID " << kind << " length=" << length << "\n";
        return kExitFound;
    }
    std::cout << "INVALID: " << result.message << "\n";
    return kExitNotFound;
}

// ---- bruteforce ---------------------------------------------------------

struct BruteArgs {
    int n = 0, k = 0, r = 0;
    bool connected = false;
    bool do_sweep = false;
    int n_min = 0, n_max = 0, k_min = 0, k_max = 0;
    std::vector<int> rs;
    std::string out_dir;
    SearchLimits limits;
};

int run_bruteforce(const BruteArgs& args) {
    if (args.do_sweep) {
        SweepGrid grid;
        grid.n_lo = args.n_min;
        grid.n_hi = args.n_max;
        grid.k_lo = args.k_min;
        grid.k_hi = args.k_max;
        grid.rs = args.rs;
        SweepResult result = sweep(grid, args.out_dir, args.limits);
        std::cout << result.tsv;
        if (result.any_discrepancy) {
            std::cerr << "DISCREPANCY: a measured value contradicts a proven statement\n";
            return kExitNotFound;
        }
        return kExitFound;
    }
    BruteForceReport report = brute_force_ex(args.n, args.k, args.r, args.connected, args.limits);
    SweepRow row = summarize_cell(report);
    std::cout << sweep_tsv_header() << to_tsv(row);
    std::cerr << "subset tests: " << report.total_scanned << ", witness classes: "
              << report.witness_classes() << ", elapsed: " << report.elapsed_seconds << "s\n";
    if (!args.out_dir.empty()) {
        std::filesystem::create_directories(args.out_dir);
        for (const std::string& form : report.witness_forms) {
            std::ofstream out(args.out_dir + "/" + canonical_hash(form) + ".txt",
                              std::ios::binary);
            out << form;
        }
    }
    if (!report.authoritative) {
        std::cerr << "budget expired: report is a lower-bound sketch\n";
        return kExitBudget;
    }
    if (row.equal == "DISCREPANCY") {
        std::cerr << "DISCREPANCY: measured value contradicts a proven statement\n";
        return kExitNotFound;
    }
    return kExitFound;
}

// ---- selftest -----------------------------------------------------------

struct SelfTestArgs {
    std::string suite = "all";
    int trials = 50;
    std::uint64_t seed = 1;
    int max_n = 7;
    int r = 3;
    int max_m = 8;
    int max_t = 6;
    int jobs = 1;
};

int run_selftest(const SelfTestArgs& args) {
    int failures = 0;
    auto emit = [&](const std::string& name, const SelfTestReport& report) {
        for (const std::string& line : report.log) std::cout << name << ": " << line << "\n";
        std::cout << name << ": " << report.trials << " trials, " << report.failures
                  << " failures\n";
        failures += report.failures;
    };
    if (args.suite == "agreement" || args.suite == "all")
        emit("agreement", run_oracle_agreement(args.trials, args.seed, args.max_n, args.r,
                                               args.max_m, args.max_t, args.jobs));
    if (args.suite == "rotation" || args.suite == "all")
        emit("rotation", run_rotation_suite(args.trials, args.seed, args.max_n, args.r,
                                            args.max_m));
    if (args.suite != "agreement" && args.suite != "rotation" && args.suite != "all")
        throw CLI::ValidationError("--suite", "unknown suite (want agreement|rotation|all)");
    return failures == 0 ? kExitFound : kExitNotFound;
}

void add_limit_options(CLI::App* cmd, SearchLimits& limits) {
    cmd->add_option("--max-nodes", limits.max_nodes, "node budget for the whole search");
    cmd->add_option("--time-limit", limits.time_limit_seconds,
                    "wall-clock limit in seconds (outcome near the limit may vary run to run)");
    cmd->add_option("--jobs", limits.jobs, "worker threads")
        ->envname("BERGEKIT_JOBS")
        ->check(CLI::Range(1, 256));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berge-path and Berge-cycle toolkit for r-uniform hypergraphs"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    CLI::App* construct = app.add_subcommand("construct", "build a named hypergraph family");
    construct->add_option("--family", construct_args.family,
                          "extremal|complete|gkl1|tree-like|union")->required();
    construct->add_option("-n,--n", construct_args.n, "vertex count")->required();
    construct->add_option("-k,--k", construct_args.k,
                          "forbidden path length (ignored by complete)");
    construct->add_option("-r,--r", construct_args.r, "edge size")->required();
    construct->add_option("-o,--output", construct_args.output, "output file, - for stdout");

    CountArgs count_args;
    CLI::App* count = app.add_subcommand("count", "evaluate the exact counting formulas");
    count->add_option("-n,--n", count_args.n)->required();
    count->add_option("-k,--k", count_args.k)->required();
    count->add_option("-r,--r", count_args.r)->required();
    count->add_option("-a,--a,--core-size", count_args.a,
                      "core size for f_star (default floor((k-1)/2))");
    count->add_flag("-v,--verbose", count_args.verbose, "append the raw rational column");

    CountArgs bounds_args;
    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the upper-bound formulas");
    bounds->add_option("-n,--n", bounds_args.n)->required();
    bounds->add_option("-k,--k", bounds_args.k)->required();
    bounds->add_option("-r,--r", bounds_args.r)->required();
    bounds->add_option("-a,--a,--core-size", bounds_args.a,
                       "also report f_star at this core size");
    bounds->add_flag("-v,--verbose", bounds_args.verbose, "append the raw rational column");

    SearchArgs search_args;
    CLI::App* search = app.add_subcommand("search", "exhaustive certificate search");
    search->add_option("-i,--input", search_args.input, "hypergraph file, - for stdin");
    auto* opt_path = search->add_option("--path-length,--path", search_args.path_length,
                                        "find a Berge path of exactly this length");
    auto* opt_cycle = search->add_option("--cycle-min,--cycle", search_args.cycle_length,
                                         "find a Berge cycle of at least this length");
    auto* opt_longest = search->add_flag("--longest-path,--longest", search_args.longest,
                                         "find a longest Berge path");
    opt_path->excludes(opt_cycle)->excludes(opt_longest);
    opt_cycle->excludes(opt_longest);
    search->add_option("-c,--certificate-out,--certificate", search_args.certificate_path,
                       "also write the certificate to this file");
    add_limit_options(search, search_args.limits);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check a certificate against a hypergraph");
    verify->add_option("-i,--input", verify_args.input, "hypergraph file, - for stdin");
    verify->add_option("-c,--certificate", verify_args.certificate_path, "certificate file")
        ->required();

    BruteArgs brute_args;
    CLI::App* brute = app.add_subcommand("bruteforce",
                                         "exact extremal numbers by exhaustive scan");
    brute->add_option("-n,--n", brute_args.n, "vertex count (single cell)");
    brute->add_option("-k,--k", brute_args.k, "forbidden path length (single cell)");
    brute->add_option("-r,--r", brute_args.r, "edge size (single cell)");
    brute->add_flag("--connected", brute_args.connected, "restrict to connected hypergraphs");
    brute->add_flag("--sweep", brute_args.do_sweep, "run a grid instead of a single cell");
    brute->add_option("--n-min", brute_args.n_min);
    brute->add_option("--n-max", brute_args.n_max);
    brute->add_option("--k-min", brute_args.k_min);
    brute->add_option("--k-max", brute_args.k_max);
    brute->add_option("--rs", brute_args.rs, "edge sizes for the sweep");
    brute->add_option("--out,--out-dir", brute_args.out_dir,
                      "write witness files (and summary.tsv for sweeps) here");
    add_limit_options(brute, brute_args.limits);

    SelfTestArgs selftest_args;
    CLI::App* selftest = app.add_subcommand("selftest", "randomized cross-checks");
    selftest->add_option("--suite", selftest_args.suite, "agreement|rotation|all");
    selftest->add_option("--trials", selftest_args.trials)->check(CLI::Range(1, 1000000));
    selftest->add_option("--seed", selftest_args.seed);
    selftest->add_option("--max-n", selftest_args.max_n)->check(CLI::Range(2, 16));
    selftest->add_option("-r", selftest_args.r)->check(CLI::Range(2, 8));
    selftest->add_option("--max-m", selftest_args.max_m)->check(CLI::Range(0, 64));
    selftest->add_option("--max-t", selftest_args.max_t)->check(CLI::Range(1, 16));
    selftest->add_option("--jobs", selftest_args.jobs)
        ->envname("BERGEKIT_JOBS")
        ->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
        if (*construct) return run_construct(construct_args);
        if (*count) return run_count(count_args);
        if (*bounds) return run_bounds(bounds_args);
        if (*search) {
            int selected = (search_args.path_length > 0 ? 1 : 0) +
                           (search_args.cycle_length > 0 ? 1 : 0) + (search_args.longest ? 1 : 0);
            if (selected != 1)
                throw CLI::ValidationError("search",
                                           "choose exactly one of --path, --cycle, --longest");
            return run_search(search_args);
        }
        if (*verify) return run_verify(verify_args);
        if (*brute) {
            if (brute_args.do_sweep && brute_args.rs.empty())
                throw CLI::ValidationError("--rs", "a sweep needs at least one edge size");
            return run_bruteforce(brute_args);
        }
        if (*selftest) return run_selftest(selftest_args);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
