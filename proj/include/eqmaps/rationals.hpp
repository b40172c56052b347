#ifndef EQMAPS_RATIONALS_HPP
#define EQMAPS_RATIONALS_HPP

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace eqmaps {

// Exact arithmetic substrate. mpq_class is canonical by construction:
// lowest terms, positive denominator.
using bigint = mpz_class;
using rational = mpq_class;

// gmpxx has no long long overloads; route through long (or decimal text).
inline bigint to_bigint(long long v)
{
    if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max())
        return bigint(static_cast<long>(v));
    return bigint(std::to_string(v));
}

inline long long factorial(int n)
{
    if (n < 0 || n > 20)
        throw std::invalid_argument("factorial: argument out of supported range [0,20]");
    long long r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// n!! = n(n-2)(n-4)...; empty product for n <= 0.
inline long long double_factorial(int n)
{
    if (n > 33)
        throw std::invalid_argument("double_factorial: argument too large");
    long long r = 1;
    for (int i = n; i > 1; i -= 2)
        r *= i;
    return r;
}

inline long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace eqmaps

#endif
