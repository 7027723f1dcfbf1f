#pragma once

#include <gmpxx.h>

#include <string>

namespace psalg {

using Rational = mpq_class;

// mpq_class(n, d) does not reduce; arithmetic results are always canonical.
inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" with q > 0 and gcd(p, q) = 1; integers print without the denominator.
inline std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace psalg
