#include "spinv/rational.hpp"

#include <cctype>

#include "spinv/errors.hpp"

namespace spinv {

Rational make_rational(std::int64_t p, std::int64_t q) {
  if (q == 0) throw DomainError("zero denominator");
  Rational r;
  mpz_set_si(r.get_num_mpz_t(), static_cast<long>(p));
  mpz_set_si(r.get_den_mpz_t(), static_cast<long>(q));
  r.canonicalize();
  return r;
}

namespace {

// Strips an optional leading sign; returns true if it was '-'.
bool take_sign(std::string_view& s) {
  const bool negative = !s.empty() && s.front() == '-';
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return negative;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  const bool negative = take_sign(num) != take_sign(den);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("not a rational literal: '" + std::string(text) + "'");

  Rational r;
  r.get_num().set_str(std::string(num), 10);
  r.get_den().set_str(std::string(den), 10);
  if (negative) r.get_num() = -r.get_num();
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace spinv
