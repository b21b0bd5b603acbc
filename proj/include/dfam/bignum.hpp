#pragma once
// Exact integer arithmetic for counts and binomial sums.  Counts cross 2^64
// quickly (e.g. binom(159,39)), so everything countable is cpp_int and
// serializes as a decimal string.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dfam {

using Int = boost::multiprecision::cpp_int;

// binom(n,k) with degenerate arguments (k < 0, k > n, n < 0) evaluating to 0;
// that convention keeps boundary terms of decomposition sums well-formed.
inline Int exact_binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is binom(n-k+i, i) after this step
    }
    return r;
}

inline std::string dec(const Int& v) { return v.str(); }

inline double as_double(const Int& v) { return v.convert_to<double>(); }

} // namespace dfam
