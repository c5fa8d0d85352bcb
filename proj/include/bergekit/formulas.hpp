#pragma once

// Closed-form edge-count formulas and upper bounds for r-uniform hypergraphs
// without long Berge paths or cycles. All arithmetic is exact arbitrary
// precision; rational bounds keep their numerator and denominator alongside
// the floored value. Evaluators never refuse parameters: out-of-hypothesis
// queries still produce the formula value with hypothesis_ok set to false.
//
// Throughout, a = floor((k-1)/2) unless an explicit a is supplied, and
// binom(a, b) follows the convention binom(a, b) = 0 when b < 0 or b > a.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bergekit {

using Integer = boost::multiprecision::cpp_int;

enum class Exactness {
    exact_formula,       // the value is the exact extremal count
    upper_bound,         // an upper bound, conjectural or out of hypothesis
    upper_bound_floored  // an upper bound obtained by flooring a rational
};

inline const char* to_string(Exactness e) {
    switch (e) {
        case Exactness::exact_formula: return "exact-formula";
        case Exactness::upper_bound: return "upper-bound";
        case Exactness::upper_bound_floored: return "upper-bound-floored";
    }
    return "?";
}

/// A bound evaluation: the integer value, how it was obtained, whether the
/// backing statement's hypothesis holds for the queried parameters, the exact
/// rational value/denominator behind floored bounds, and the regime label for
/// evaluators that select between formulas.
struct BoundValue {
    Integer value = 0;
    Exactness exactness = Exactness::exact_formula;
    bool hypothesis_ok = true;
    Integer rational_num = 0;
    Integer rational_den = 1;
    std::string regime;
};

/// binom(a, b) with binom(a, b) = 0 for b < 0, b > a, or a < 0, and
/// binom(a, 0) = 1 for a >= 0. Exact at any size.
inline Integer binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Integer result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= (a - b + i);
        result /= i;  // divides exactly: the partial product is binom(a-b+i, i)
    }
    return result;
}

/// a = floor((k-1)/2), the core size derived from the longest permitted path
/// length. Defined for k >= 1; smaller k yields a negative value that zeroes
/// every binomial built on it.
inline long long derived_core_size(long long k) {
    long long t = k - 1;
    return t >= 0 ? t / 2 : -((-t + 1) / 2);
}

/// Edge count above which the exact extremal formula is proven to apply for
/// connected hosts: binom(r(k-1), r) + binom(a, r-1)*a - binom(a, r)
/// - [k even] binom(a, r-2) + r(k-1).
inline Integer threshold_N(long long k, long long r) {
    long long a = derived_core_size(k);
    Integer value = binom(r * (k - 1), r);
    value += binom(a, r - 1) * a;
    value -= binom(a, r);
    if (k % 2 == 0) value -= binom(a, r - 2);
    value += r * (k - 1);
    return value;
}

/// Maximum edge count of a connected r-uniform hypergraph on n vertices with
/// no Berge path of length k:
///   binom(a, r-1)(n-a) + binom(a, r) + [k even] binom(a, r-2).
/// Exact when n > threshold_N(k, r) and k >= 2r + 13; still evaluated, as an
/// unproven bound, otherwise.
inline BoundValue extremal_count(long long n, long long k, long long r) {
    long long a = derived_core_size(k);
    BoundValue out;
    out.value = binom(a, r - 1) * (Integer(n) - a) + binom(a, r);
    if (k % 2 == 0) out.value += binom(a, r - 2);
    out.hypothesis_ok = k >= 2 * r + 13 && Integer(n) > threshold_N(k, r);
    out.exactness = out.hypothesis_ok ? Exactness::exact_formula : Exactness::upper_bound;
    out.rational_num = out.value;
    out.rational_den = 1;
    return out;
}

/// binom(k-a, r) + (n-k+a) binom(a, r-1): the edge count of the family that
/// interpolates between a complete block on k-a vertices and the core-plus-
/// pendant family. At a = floor((k-1)/2) it coincides with extremal_count.
inline Integer f_star(long long n, long long k, long long r, long long a) {
    return binom(k - a, r) + (Integer(n) - k + a) * binom(a, r - 1);
}

namespace detail {

inline BoundValue floored_bound(Integer num, Integer den, bool hypothesis_ok,
                                std::string regime = "") {
    BoundValue out;
    out.rational_num = num;
    out.rational_den = den;
    out.value = den > 0 ? Integer(num / den) : Integer(0);
    if (den > 0 && num < 0 && num % den != 0) out.value -= 1;  // floor, not truncation
    out.exactness = Exactness::upper_bound_floored;
    out.hypothesis_ok = hypothesis_ok;
    out.regime = std::move(regime);
    return out;
}

}  // namespace detail

/// Graph bound: a graph on n vertices with more than (k-1)n/2 edges contains
/// a path with k edges. Requires r = 2 hosts; stated here for cross-checks.
inline BoundValue eg_path_bound(long long n, long long k) {
    return detail::floored_bound(Integer(k - 1) * n, 2, k >= 1 && n >= k);
}

/// Graph bound: a graph on n vertices with more than (k-1)(n-1)/2 edges
/// contains a cycle of length at least k.
inline BoundValue eg_cycle_bound(long long n, long long k) {
    return detail::floored_bound(Integer(k - 1) * (Integer(n) - 1), 2, k >= 3 && n >= k);
}

/// Upper bound for r-uniform hosts with no Berge path of length k, selecting
/// the applicable regime:
///   r >= k >= 3:  floor((k-1) n / (r+1))      (regime "gkl1")
///   k >= r+1:     floor(n binom(k, r) / k)    (regime "gkl2")
/// Outside both regimes (k < 3 or r < 2) the value is 0 with regime "none"
/// and hypothesis_ok false.
inline BoundValue gkl_bound(long long n, long long k, long long r) {
    if (k < 3 || r < 2) {
        BoundValue out;
        out.exactness = Exactness::upper_bound;
        out.hypothesis_ok = false;
        out.regime = "none";
        return out;
    }
    if (r >= k) return detail::floored_bound(Integer(k - 1) * n, r + 1, true, "gkl1");
    return detail::floored_bound(Integer(n) * binom(k, r), k, true, "gkl2");
}

/// Upper bound for r-uniform hosts with no Berge cycle of length k or
/// longer: floor((n-1) binom(k-1, r) / (k-2)). Proven for k >= r+3 >= 6.
inline BoundValue fkl_cycle_bound(long long n, long long k, long long r) {
    bool hypothesis_ok = k >= r + 3 && r >= 3;
    if (k < 3) {
        BoundValue out;
        out.exactness = Exactness::upper_bound;
        out.hypothesis_ok = false;
        return out;
    }
    return detail::floored_bound((Integer(n) - 1) * binom(k - 1, r), k - 2, hypothesis_ok);
}

}  // namespace bergekit
