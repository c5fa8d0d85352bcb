#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "bergekit/formulas.hpp"

using namespace bergekit;

TEST_CASE("binomial coefficients match a Pascal triangle") {
    // Independent recurrence, no shared code with binom().
    const int top = 60;
    std::vector<std::vector<Integer>> pascal(top + 1);
    for (int a = 0; a <= top; ++a) {
        pascal[a].assign(static_cast<std::size_t>(a) + 1, 1);
        for (int b = 1; b < a; ++b)
            pascal[a][static_cast<std::size_t>(b)] =
                pascal[a - 1][static_cast<std::size_t>(b) - 1] + pascal[a - 1][static_cast<std::size_t>(b)];
    }
    for (int a = 0; a <= top; ++a)
        for (int b = 0; b <= a; ++b)
            REQUIRE(binom(a, b) == pascal[a][static_cast<std::size_t>(b)]);
    REQUIRE(binom(5, 7) == 0);
    REQUIRE(binom(5, -1) == 0);
    REQUIRE(binom(-3, 2) == 0);
    REQUIRE(binom(40, 20) == Integer("137846528820"));
}

TEST_CASE("core size") {
    REQUIRE(derived_core_size(19) == 9);
    REQUIRE(derived_core_size(20) == 9);
    REQUIRE(derived_core_size(3) == 1);
    REQUIRE(derived_core_size(2) == 0);
}

TEST_CASE("frozen counting values") {
    REQUIRE(extremal_count(30, 19, 3).value == 840);
    REQUIRE(extremal_count(30, 20, 3).value == 849);
    REQUIRE(threshold_N(19, 3) == 25098);
    REQUIRE(threshold_N(20, 3) == 29548);
    REQUIRE(f_star(30, 19, 3, 9) == 840);
}

TEST_CASE("counting formula structure") {
    // Odd k: binom(a, r-1) * (n - a) + binom(a, r).
    REQUIRE(extremal_count(7, 7, 3).value == 13);
    // Even k adds binom(a, r-2) for the pair completions.
    REQUIRE(extremal_count(8, 8, 3).value == 19);
    REQUIRE(extremal_count(6, 5, 3).value == 4);
    // Tiny k renders the formula inapplicable but still well defined.
    REQUIRE(extremal_count(4, 3, 3).value == 0);
    REQUIRE_FALSE(extremal_count(4, 3, 3).hypothesis_ok);
    // Hypothesis: k >= 2r + 13 and n beyond the threshold.
    REQUIRE(extremal_count(30000, 19, 3).hypothesis_ok);
    REQUIRE(extremal_count(25098, 19, 3).hypothesis_ok == false);  // n must exceed the threshold
    REQUIRE(extremal_count(25099, 19, 3).hypothesis_ok);
    REQUIRE(extremal_count(30000, 18, 3).hypothesis_ok == false);  // 18 < 2*3 + 13
    REQUIRE(extremal_count(30000, 19, 3).exactness == Exactness::exact_formula);
    REQUIRE(extremal_count(30, 19, 3).exactness == Exactness::upper_bound);
}

TEST_CASE("the closed form and the two-part count agree everywhere") {
    for (int r = 2; r <= 5; ++r)
        for (int k = 3; k <= 40; ++k)
            for (int n = k; n <= k + 50; ++n)
                REQUIRE(f_star(n, k, r, derived_core_size(k)) == extremal_count(n, k, r).value);
}

TEST_CASE("floored bounds") {
    BoundValue eg = eg_path_bound(10, 5);
    REQUIRE(eg.value == 20);
    REQUIRE(eg.exactness == Exactness::upper_bound_floored);
    REQUIRE(eg.hypothesis_ok);
    REQUIRE(eg_path_bound(7, 4).value == 10);  // floor(21/2)
    REQUIRE(eg_path_bound(7, 4).rational_num == 21);
    REQUIRE(eg_path_bound(7, 4).rational_den == 2);
    REQUIRE_FALSE(eg_path_bound(3, 5).hypothesis_ok);  // n < k

    REQUIRE(eg_cycle_bound(10, 5).value == 18);
    REQUIRE(eg_cycle_bound(7, 4).value == 9);
    REQUIRE_FALSE(eg_cycle_bound(7, 2).hypothesis_ok);  // k < 3
}

TEST_CASE("the uniform path bound splits into two regimes") {
    BoundValue low = gkl_bound(4, 3, 3);  // r >= k
    REQUIRE(low.regime == "gkl1");
    REQUIRE(low.value == 2);
    REQUIRE(low.hypothesis_ok);
    REQUIRE(low.rational_num == 8);
    REQUIRE(low.rational_den == 4);

    BoundValue high = gkl_bound(8, 4, 3);  // k >= r + 1
    REQUIRE(high.regime == "gkl2");
    REQUIRE(high.value == 8);  // 8 * binom(4,3) / 4
    REQUIRE(high.hypothesis_ok);

    BoundValue none = gkl_bound(10, 2, 3);  // k < 3: no statement applies
    REQUIRE(none.regime == "none");
    REQUIRE(none.value == 0);
    REQUIRE_FALSE(none.hypothesis_ok);
    REQUIRE_FALSE(gkl_bound(10, 5, 1).hypothesis_ok);
}

TEST_CASE("the cycle bound") {
    BoundValue fkl = fkl_cycle_bound(9, 6, 3);
    REQUIRE(fkl.value == 20);  // floor(8 * binom(5,3) / 4)
    REQUIRE(fkl.hypothesis_ok);  // 6 >= 3 + 3
    REQUIRE(fkl_cycle_bound(10, 4, 3).hypothesis_ok == false);  // k < r + 3
    REQUIRE(fkl_cycle_bound(10, 4, 3).value == 4);  // floor(9 * 1 / 2)
    REQUIRE(fkl_cycle_bound(10, 2, 3).value == 0);
    REQUIRE_FALSE(fkl_cycle_bound(10, 2, 3).hypothesis_ok);
}
