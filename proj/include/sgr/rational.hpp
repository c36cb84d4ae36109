#pragma once

#include <gmpxx.h>

#include <string>

namespace sgr {

// Exact rational scalar. Every computation in the engine is exact; there is
// no floating point anywhere.
using Rational = mpq_class;

// mpq_class does not canonicalize on (num, den) construction; this does.
inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "p" or "p/q" form with q > 0 and gcd(p, q) = 1.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace sgr
