#pragma once

#include <gmpxx.h>

#include <string>

namespace hedet {

/// Exact rational backed by GMP; always canonical after construction.
using Rational = mpq_class;

/// "num/den", also for integers ("6/1"). Never a decimal.
std::string to_string(const Rational & r);

/// Accepts "num/den" or an integer.
Rational parse_rational(const std::string & text);

} // namespace hedet
