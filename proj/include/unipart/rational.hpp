#pragma once

#include <gmpxx.h>

#include <string>

namespace unipart {

// Exact arbitrary-precision integers and rationals, backed by GMP.
// mpq_class keeps the canonical form we need (coprime, positive
// denominator), so equality is plain coefficient equality.
using Int = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or "p" (decimal, optional sign). Throws errc::bad_input.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

std::string format_int(const Int& value);

} // namespace unipart
