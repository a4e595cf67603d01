#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace toricnc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// C(n,k); zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// C(2n,n)/(n+1); zero for n < 0.
inline Int catalan(long n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

inline Int pow2(long n) {
    return Int(1) << n;
}

}  // namespace toricnc
