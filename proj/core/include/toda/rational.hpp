#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals.
 *
 * Rationals are GMP's mpq_class.  GMP keeps every arithmetic result in
 * canonical form (reduced, positive denominator), so structural equality
 * coincides with numeric equality.  The helpers below add the canonical
 * "p/q" text form used for hashing and JSON.
 */

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace toda {

using Rational = mpq_class;

/// Canonical text form "p/q" (the denominator is always written, "3/1").
std::string to_string(const Rational& q);

/// Short human form: "3" for integers, "-1/2" otherwise.
std::string to_display(const Rational& q);

/// Parse "p", "p/q" or "-p/q"; throws FormatError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// True when the denominator is 1.
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace toda
