#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace levifol {

/// Exact rational number, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Dense coefficient vector over the rationals.
using Vec = std::vector<Rational>;

/// Renders `p/q`, or `p` when the denominator is one.
std::string to_string(const Rational& q);

/// Parses `p` or `p/q`; throws InputError on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

bool is_zero(const Vec& v);

}  // namespace levifol
