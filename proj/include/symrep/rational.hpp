#pragma once

#include <gmpxx.h>

#include <string>

namespace symrep {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (GMP keeps arithmetic results canonical).
using Rational = mpq_class;

inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q" (plain "p" when the denominator is 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace symrep
