#pragma once
/**
 * Exact rationals backed by GMP.
 *
 * mpq_class keeps values canonical (positive denominator, reduced) as long
 * as they are built through its arithmetic operators; parse_rational
 * canonicalizes explicitly.
 */
#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hecke {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a/b" or "a". Throws std::invalid_argument on malformed text or b = 0.
Rational parse_rational(std::string_view text);

/// Always "a/b" with b > 0, including integers ("3/1").
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Rational rational_pow(const Rational& base, long exp);

/// Checked division; throws std::domain_error on a zero divisor.
Rational checked_div(const Rational& a, const Rational& b);

}  // namespace hecke
