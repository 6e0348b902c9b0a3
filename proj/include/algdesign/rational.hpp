#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace algdesign {

using Rational = mpq_class;

/// Parses `-3`, `2/5` or `0.4`. Decimals are exact: d digits after the point
/// give denominator 10^d. Exponent notation is rejected.
Rational parse_rational(std::string_view text);

/// Canonical text: `p` or `p/q` with q > 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace algdesign
