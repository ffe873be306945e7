#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace spinv {

// Arbitrary-precision rational. gmpxx keeps results of arithmetic canonical
// (positive denominator, lowest terms, zero as 0/1).
using Rational = mpq_class;

// p/q in lowest terms. Throws DomainError on q == 0.
Rational make_rational(std::int64_t p, std::int64_t q = 1);

// Accepts "k" or "p/q" with an optional leading sign on the numerator.
// Non-canonical fractions such as "2/4" are accepted and reduced.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

}  // namespace spinv
