#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace monocurve {

using Rational = mpq_class;

/// Always "num/den", including integers ("3/1").
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace monocurve
