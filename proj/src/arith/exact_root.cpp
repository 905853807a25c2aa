#include "wph/arith/exact_root.hpp"

#include <numeric>

#include "wph/errors.hpp"

namespace wph {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      out.push_back(p);
      while (k % p == 0) k /= p;
    }
  }
  if (k > 1) out.push_back(k);
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("radical index overflow");
  }
  return out;
}

}  // namespace

ExactRoot::ExactRoot(const Rational& radicand, std::uint64_t index)
    : radicand_(radicand), index_(index) {
  if (index == 0) throw DomainError("exact_root: index must be positive");
  if (radicand <= 0) throw DomainError("exact_root: radicand must be positive");
  radicand_.canonicalize();
  canonicalize();
}

void ExactRoot::canonicalize() {
  if (radicand_ == 1) {
    index_ = 1;
    return;
  }
  for (std::uint64_t p : prime_divisors(index_)) {
    while (index_ % p == 0) {
      Integer num_root, den_root;
      if (!exact_integer_root(radicand_.get_num(), p, num_root) ||
          !exact_integer_root(radicand_.get_den(), p, den_root)) {
        break;
      }
      radicand_ = make_rational(num_root, den_root);
      index_ /= p;
    }
  }
}

ExactRoot ExactRoot::power_of(const Rational& base, const Rational& exponent) {
  if (base <= 0) throw DomainError("power_of: base must be positive");
  Integer num = exponent.get_num();
  Integer den = exponent.get_den();
  if (!num.fits_slong_p() || !den.fits_ulong_p()) {
    throw DomainError("power_of: exponent too large");
  }
  return ExactRoot(rpow(base, num.get_si()), den.get_ui());
}

std::optional<Rational> ExactRoot::rational_power(std::uint64_t e) const {
  if (e % index_ != 0) return std::nullopt;
  return rpow(radicand_, static_cast<std::int64_t>(e / index_));
}

ExactRoot ExactRoot::inverse() const {
  ExactRoot out;
  out.radicand_ = 1 / radicand_;
  out.index_ = index_;
  return out;
}

ExactRoot ExactRoot::pow(const Rational& exponent) const {
  if (exponent <= 0) throw DomainError("exact_root_pow: exponent must be > 0");
  Integer num = exponent.get_num();
  Integer den = exponent.get_den();
  if (!num.fits_ulong_p() || !den.fits_ulong_p()) {
    throw DomainError("exact_root_pow: exponent too large");
  }
  return ExactRoot(rpow(radicand_, static_cast<std::int64_t>(num.get_ui())),
                   checked_mul(index_, den.get_ui()));
}

ExactRoot operator*(const ExactRoot& a, const ExactRoot& b) {
  std::uint64_t l = std::lcm(a.index_, b.index_);
  Rational prod = rpow(a.radicand_, static_cast<std::int64_t>(l / a.index_)) *
                  rpow(b.radicand_, static_cast<std::int64_t>(l / b.index_));
  return ExactRoot(prod, l);
}

std::strong_ordering operator<=>(const ExactRoot& a, const ExactRoot& b) {
  if (a == b) return std::strong_ordering::equal;
  std::uint64_t l = std::lcm(a.index_, b.index_);
  Rational lhs = rpow(a.radicand_, static_cast<std::int64_t>(l / a.index_));
  Rational rhs = rpow(b.radicand_, static_cast<std::int64_t>(l / b.index_));
  int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const ExactRoot& a, const ExactRoot& b) {
  return a <=> b;
}

std::string ExactRoot::to_string() const {
  if (is_one()) return "1";
  return "root(" + wph::to_string(radicand_) + "," + std::to_string(index_) +
         ")";
}

ExactRoot ExactRoot::parse(std::string_view text) {
  constexpr std::string_view prefix = "root(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    std::string_view body = text.substr(prefix.size());
    body.remove_suffix(1);
    std::size_t comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("malformed root '" + std::string(text) + "'");
    }
    Rational m = parse_rational(body.substr(0, comma));
    Integer k = parse_integer(body.substr(comma + 1));
    if (m <= 0 || k <= 0 || !k.fits_ulong_p()) {
      throw ParseError("root needs positive radicand and index: '" +
                       std::string(text) + "'");
    }
    return ExactRoot(m, k.get_ui());
  }
  Rational v = parse_rational(text);
  if (v <= 0) {
    throw ParseError("expected a positive value, got '" + std::string(text) +
                     "'");
  }
  return ExactRoot(v);
}

}  // namespace wph
