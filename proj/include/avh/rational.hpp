#pragma once

#include <gmpxx.h>

#include <string>

#include "avh/errors.hpp"

namespace avh {

/// Exact rational scalar. GMP keeps the canonical form: positive
/// denominator coprime to the numerator, zero stored as 0/1.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Canonical string: "num" when the denominator is 1, else "num/den".
inline std::string rat_str(const Rational& q) { return q.get_str(); }

/// Parses "num" or "num/den" (optional sign, arbitrary precision).
Rational rat_parse(const std::string& s);

/// Exact binary-to-rational conversion (doubles are dyadic rationals).
Rational rat_from_double(double x);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Rational binomial(long n, long k);

/// k! as a rational.
Rational factorial(long k);

} // namespace avh
