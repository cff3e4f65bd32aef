#pragma once

#include <gmpxx.h>

#include <string>

namespace ncmops {

// The scalar field: exact arbitrary-precision rationals. Nothing in the
// library ever rounds.
using Rat = mpq_class;

// num/den reduced to canonical form (den > 0, coprime). den must be nonzero.
Rat make_rational(long num, long den = 1);

// Parses "p/q" or a bare integer "p" (optional sign, q > 0 after
// canonicalization). Throws ParseError on anything else.
Rat parse_rational(const std::string& text);

// Serializes as "p/q" in lowest terms with q > 0 — always with the explicit
// denominator, e.g. "3/1", "-1/2".
std::string fraction_string(const Rat& value);

}  // namespace ncmops
