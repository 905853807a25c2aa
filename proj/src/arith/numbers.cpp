#include "wph/arith/numbers.hpp"

#include <limits>

#include "wph/errors.hpp"

namespace wph {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(',', start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw ParseError("malformed integer '" + std::string(text) + "'");
  }
  Integer value;
  value.set_str(std::string(digits), 10);
  if (text.front() == '-') value = -value;
  return value;
}

Rational parse_rational(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    try {
      return Rational(parse_integer(text));
    } catch (const ParseError&) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
  }
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer num;
  try {
    num = parse_integer(num_text);
  } catch (const ParseError&) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto part : split_commas(text)) out.push_back(parse_rational(part));
  return out;
}

std::vector<std::uint64_t> parse_positive_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (auto part : split_commas(text)) {
    if (!all_digits(part)) {
      throw ParseError("malformed weight '" + std::string(part) + "'");
    }
    Integer v = parse_integer(part);
    if (v <= 0 || v > Integer(std::to_string(
                           std::numeric_limits<std::uint32_t>::max()))) {
      throw ParseError("weight out of range '" + std::string(part) + "'");
    }
    out.push_back(v.get_ui());
  }
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer out;
  if (exponent > std::numeric_limits<unsigned long>::max()) {
    throw DomainError("exponent too large");
  }
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return out;
}

Rational rpow(const Rational& base, std::int64_t exponent) {
  if (exponent >= 0) {
    return make_rational(ipow(base.get_num(), exponent),
                         ipow(base.get_den(), exponent));
  }
  if (base == 0) throw DomainError("zero raised to a negative power");
  auto e = static_cast<std::uint64_t>(-exponent);
  return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

bool exact_integer_root(const Integer& value, std::uint64_t k, Integer& root) {
  if (k == 1) {
    root = value;
    return true;
  }
  if (value < 0 && k % 2 == 0) return false;
  return mpz_root(root.get_mpz_t(), value.get_mpz_t(),
                  static_cast<unsigned long>(k)) != 0;
}

}  // namespace wph
