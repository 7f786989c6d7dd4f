#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sht {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "n", "-n" or "p/q" into canonical form. Throws Error(Schema) on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

inline int koszul_sign(long a, long b) { return ((a & 1) && (b & 1)) ? -1 : 1; }

}  // namespace sht
