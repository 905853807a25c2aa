#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wph {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an optionally signed decimal integer. Throws ParseError.
Integer parse_integer(std::string_view text);

/// Parses `a` or `a/b` (b nonzero) into a canonical rational.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. `1440,700` or `4/7,8/5`.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Comma-separated list of positive integers that fit in 64 bits.
std::vector<std::uint64_t> parse_positive_list(std::string_view text);

std::string to_string(const Integer& value);

/// `a` when the denominator is 1, otherwise `a/b`.
std::string to_string(const Rational& value);

Integer ipow(const Integer& base, std::uint64_t exponent);
Rational rpow(const Rational& base, std::int64_t exponent);

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer abs_value(const Integer& v) { return abs(v); }

inline int sign_of(const Integer& v) { return sgn(v); }
inline int sign_of(const Rational& v) { return sgn(v); }

/// Exact integer k-th root when `value` is a perfect k-th power.
bool exact_integer_root(const Integer& value, std::uint64_t k, Integer& root);

}  // namespace wph
