#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>

namespace monozeta {

// All arithmetic in this library is exact.  Coefficients are rationals,
// lattice data (covectors, volumes, determinants) are arbitrary-precision
// integers; nothing is ever rounded.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline long long to_long(const Int& v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer out of machine range: " + v.str());
    return v.convert_to<long long>();
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact: r is always a binomial coefficient so far
    }
    return r;
}

} // namespace monozeta
