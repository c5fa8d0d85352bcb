// End-to-end scenarios against the real binary, exercising exit codes,
// stdout contracts, file round trips, and the worker-count determinism of
// everything machine-readable. Usage: cli_driver <path-to-binary>.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int checks = 0;
int failures = 0;

void check(bool ok, const std::string& name) {
    ++checks;
    if (ok) {
        std::cout << "ok " << checks << " - " << name << "\n";
    } else {
        ++failures;
        std::cout << "FAIL " << checks << " - " << name << "\n";
    }
}

int run(const std::string& command) {
    int rc = std::system(command.c_str());
    if (rc == -1) return -1;
    if (WIFEXITED(rc)) return WEXITSTATUS(rc);
    return -2;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: cli_driver <path-to-binary>\n";
        return 2;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";
    const std::string dir = "cli_scratch";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto at = [&](const std::string& name) { return dir + "/" + name; };

    // --- construct: partition comment, exact bytes, reproducibility -------
    check(run(cli + " construct --family extremal -n 7 -k 7 -r 3 -o " + at("ex7.txt") +
              " 2>/dev/null") == 0,
          "construct extremal exits 0");
    std::string ex7 = slurp(at("ex7.txt"));
    check(contains(ex7, "# A=0,1,2 B=3,4,5,6\n3 7 13\n"), "extremal file carries the partition");
    check(run(cli + " construct --family extremal -n 7 -k 7 -r 3 -o " + at("ex7b.txt") +
              " 2>/dev/null") == 0 &&
              slurp(at("ex7b.txt")) == ex7,
          "construct output is byte-reproducible");
    check(run(cli + " construct --family tree -n 9 -k 6 -r 3 -o " + at("tree.txt") +
              " 2>/dev/null") == 0,
          "construct tree exits 0");
    check(run(cli + " construct --family union -n 10 -k 4 -r 3 -o /dev/null 2>/dev/null") == 0,
          "construct union exits 0");
    check(run(cli + " construct --family nonsense -n 5 -k 3 -r 3 2>/dev/null >/dev/null") == 2,
          "unknown family exits 2");
    check(run(cli + " construct --family extremal -n 4 -k 3 -r 3 2>/dev/null >/dev/null") == 2,
          "infeasible parameters exit 2");

    // --- search: exit codes, certificates, stdin ---------------------------
    check(run(cli + " search -i " + at("ex7.txt") + " --path 6 -c " + at("cert6.txt") +
              " >" + at("search6.out") + " 2>/dev/null") == 0,
          "search finds the length-6 path");
    check(contains(slurp(at("search6.out")), "status=found\npath 6\n"), "search report shape");
    check(run(cli + " search -i " + at("ex7.txt") + " --path 7 >/dev/null 2>&1") == 1,
          "absent path exits 1");
    check(run(cli + " construct --family extremal -n 7 -k 7 -r 3 2>/dev/null | " + cli +
              " search -i - --path 6 >/dev/null 2>&1") == 0,
          "search reads stdin");
    check(run(cli + " search -i " + at("ex7.txt") + " >/dev/null 2>&1") == 2,
          "search without a mode exits 2");
    check(run(cli + " search -i " + at("missing.txt") + " --path 2 >/dev/null 2>&1") == 2,
          "missing input exits 2");

    // --- verify -------------------------------------------------------------
    check(run(cli + " verify -i " + at("ex7.txt") + " -c " + at("cert6.txt") + " >" +
              at("verify.out") + " 2>/dev/null") == 0,
          "the found certificate verifies");
    check(contains(slurp(at("verify.out")), "VALID path length=6"), "verify wording");
    spill(at("bogus.txt"), "path 2\n0 1 9\n0 1\n");
    check(run(cli + " verify -i " + at("ex7.txt") + " -c " + at("bogus.txt") + " >" +
              at("verify_bad.out") + " 2>/dev/null") == 1,
          "a broken certificate exits 1");
    check(contains(slurp(at("verify_bad.out")), "INVALID: "), "invalid verdict wording");

    // --- cycles --------------------------------------------------------------
    spill(at("ring.txt"), "3 6 6\n0 1 2\n0 1 5\n0 4 5\n1 2 3\n2 3 4\n3 4 5\n");
    check(run(cli + " search -i " + at("ring.txt") + " --cycle 6 -c " + at("ring_cert.txt") +
              " >/dev/null 2>&1") == 0,
          "cycle search succeeds");
    check(run(cli + " verify -i " + at("ring.txt") + " -c " + at("ring_cert.txt") + " >" +
              at("ring_verify.out") + " 2>/dev/null") == 0,
          "cycle certificate verifies");
    check(contains(slurp(at("ring_verify.out")), "VALID cycle length=6"), "cycle verdict wording");
    check(run(cli + " search -i " + at("ring.txt") + " --cycle 7 >/dev/null 2>&1") == 1,
          "impossible cycle exits 1");

    // --- malformed inputs -----------------------------------------------------
    spill(at("bad_spaces.txt"), "3 5 1\n0  1 2\n");
    check(run(cli + " search -i " + at("bad_spaces.txt") + " --path 1 >/dev/null 2>&1") == 2,
          "double blank is rejected with exit 2");
    spill(at("bad_order.txt"), "3 5 2\n0 1 3\n0 1 2\n");
    check(run(cli + " search -i " + at("bad_order.txt") + " --path 1 >/dev/null 2>&1") == 2,
          "unsorted edges are rejected with exit 2");
    check(run(cli + " nonsense >/dev/null 2>&1") == 2, "unknown subcommand exits 2");

    // --- count and bounds golden lines ----------------------------------------
    check(run(cli + " count -n 30 -k 19 -r 3 >" + at("count.out") + " 2>/dev/null") == 0,
          "count exits 0");
    std::string count_out = slurp(at("count.out"));
    check(contains(count_out, "extremal_count\t840\t"), "count reports the frozen value");
    check(contains(count_out, "threshold_N\t25098\texact-formula\ttrue"), "count reports the threshold");
    check(contains(count_out, "f_star\t840\texact-formula\ttrue\ta=9"), "count reports f_star");
    check(run(cli + " bounds -n 9 -k 6 -r 3 >" + at("bounds.out") + " 2>/dev/null") == 0,
          "bounds exits 0");
    std::string bounds_out = slurp(at("bounds.out"));
    check(contains(bounds_out, "eg_path_bound\t22\tupper-bound-floored\ttrue"),
          "path bound row");
    check(contains(bounds_out, "eg_cycle_bound\t20\t"), "cycle bound row");
    check(contains(bounds_out, "gkl_bound\t30\tupper-bound-floored\ttrue\tgkl2"),
          "uniform bound row with its regime");
    check(contains(bounds_out, "fkl_cycle_bound\t20\tupper-bound-floored\ttrue"),
          "long cycle bound row");

    // --- budget ----------------------------------------------------------------
    check(run(cli + " construct --family extremal -n 12 -k 9 -r 3 -o " + at("big.txt") +
              " 2>/dev/null") == 0,
          "construct the budget host");
    check(run(cli + " search -i " + at("big.txt") + " --path 8 --max-nodes 3 >/dev/null 2>&1") == 3,
          "a tiny node budget exits 3");

    // --- bruteforce ---------------------------------------------------------------
    check(run(cli + " bruteforce -n 4 -k 3 -r 3 >" + at("brute.out") + " 2>/dev/null") == 0,
          "bruteforce cell exits 0");
    check(contains(slurp(at("brute.out")), "4\t3\t3\tfalse\t2\t1\tgkl1\t2\ttrue\tyes"),
          "bruteforce celebrated row");
    check(run(cli + " bruteforce --sweep --n-min 4 --n-max 4 --k-min 3 --k-max 3 --rs 3 " +
              "--out-dir " + at("sweepdir") + " >" + at("sweep.out") + " 2>/dev/null") == 0,
          "sweep exits 0");
    check(std::filesystem::exists(at("sweepdir") + "/summary.tsv"), "sweep writes summary.tsv");
    bool witness_file = false;
    for (const auto& entry : std::filesystem::directory_iterator(at("sweepdir"))) {
        std::string name = entry.path().filename().string();
        if (name.size() == 20 && name.substr(16) == ".txt") witness_file = true;
    }
    check(witness_file, "sweep writes hash-named witness files");

    // --- determinism across worker counts -----------------------------------------
    check(run(cli + " search -i " + at("big.txt") + " --path 7 --jobs 1 >" + at("jobs1.out") +
              " 2>/dev/null") == 0,
          "search with one worker");
    check(run(cli + " search -i " + at("big.txt") + " --path 7 --jobs 4 >" + at("jobs4.out") +
              " 2>/dev/null") == 0,
          "search with four workers");
    check(slurp(at("jobs1.out")) == slurp(at("jobs4.out")),
          "worker count leaves the report byte-identical");
    check(run("BERGEKIT_JOBS=4 " + cli + " search -i " + at("big.txt") + " --path 7 >" +
              at("jobsenv.out") + " 2>/dev/null") == 0,
          "worker count accepted from the environment");
    check(slurp(at("jobsenv.out")) == slurp(at("jobs1.out")), "environment workers agree too");
    check(run(cli + " bruteforce -n 5 -k 3 -r 3 --jobs 4 >" + at("brute4.out") +
              " 2>/dev/null") == 0 &&
              run(cli + " bruteforce -n 5 -k 3 -r 3 --jobs 1 >" + at("brute1.out") +
                  " 2>/dev/null") == 0 &&
              slurp(at("brute1.out")) == slurp(at("brute4.out")),
          "bruteforce reports ignore the worker count");

    // --- selftest -------------------------------------------------------------------
    check(run(cli + " selftest --trials 5 --seed 3 >/dev/null 2>&1") == 0,
          "selftest passes a quick burst");
    check(run(cli + " selftest --suite nonsense >/dev/null 2>&1") == 2,
          "unknown suite exits 2");

    // --- long-form option spellings ---------------------------------------------------
    check(run(cli + " construct --family tree-like --n 9 --k 6 --r 3 -o " + at("tree2.txt") +
              " 2>/dev/null") == 0 &&
              slurp(at("tree2.txt")) == slurp(at("tree.txt")),
          "construct accepts --family tree-like and long --n/--k/--r");
    check(run(cli + " search --input " + at("ex7.txt") + " --path-length 6 --certificate-out " +
              at("cert6b.txt") + " >/dev/null 2>&1") == 0 &&
              slurp(at("cert6b.txt")) == slurp(at("cert6.txt")),
          "search accepts --path-length and --certificate-out");
    check(run(cli + " search --input " + at("ring.txt") + " --cycle-min 6 >/dev/null 2>&1") == 0,
          "search accepts --cycle-min");
    check(run(cli + " search --input " + at("ex7.txt") + " --longest-path >/dev/null 2>&1") == 0,
          "search accepts --longest-path");
    check(run(cli + " bounds --n 30 --k 19 --r 3 --a 9 >" + at("bounds_a.out") +
              " 2>/dev/null") == 0 &&
              contains(slurp(at("bounds_a.out")), "f_star\t840\texact-formula\ttrue\ta=9"),
          "bounds --a appends the f_star row");
    check(run(cli + " bounds -n 9 -k 6 -r 3 -v >" + at("bounds_v.out") + " 2>/dev/null") == 0 &&
              contains(slurp(at("bounds_v.out")),
                       "eg_path_bound\t22\tupper-bound-floored\ttrue\t-\t45/2") &&
              contains(slurp(at("bounds_v.out")), "gkl_bound\t30\t") &&
              contains(slurp(at("bounds_v.out")), "\t180/6"),
          "bounds --verbose appends the raw rational");
    check(run(cli + " bruteforce -n 4 -k 3 -r 3 --out " + at("cellout") + " >/dev/null 2>&1") ==
                  0 &&
              run("test -n \"$(ls " + at("cellout") + ")\"") == 0,
          "bruteforce --out writes witness files");

    std::cout << (failures == 0 ? "all " : "FAILURES: ") << checks << " checks, "
              << failures << " failed\n";
    return failures == 0 ? 0 : 1;
}
