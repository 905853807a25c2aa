#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "wph/arith/numbers.hpp"

namespace wph {

/// A positive real m^(1/k) with m a positive rational. Always held in
/// canonical form: k is the least positive integer with value^k rational,
/// so equal values have identical (radicand, index) pairs.
class ExactRoot {
 public:
  /// The value 1.
  ExactRoot() = default;

  /// radicand^(1/index), canonicalized. Throws DomainError when
  /// radicand <= 0 or index == 0.
  ExactRoot(const Rational& radicand, std::uint64_t index);

  explicit ExactRoot(const Rational& value) : ExactRoot(value, 1) {}

  /// base^exponent for base > 0 and any rational exponent.
  static ExactRoot power_of(const Rational& base, const Rational& exponent);

  const Rational& radicand() const noexcept { return radicand_; }
  std::uint64_t index() const noexcept { return index_; }

  bool is_rational() const noexcept { return index_ == 1; }
  bool is_one() const noexcept { return index_ == 1 && radicand_ == 1; }

  /// value^e when that is rational (index divides e).
  std::optional<Rational> rational_power(std::uint64_t e) const;

  ExactRoot inverse() const;
  ExactRoot pow(const Rational& exponent) const;

  friend ExactRoot operator*(const ExactRoot& a, const ExactRoot& b);
  friend ExactRoot operator/(const ExactRoot& a, const ExactRoot& b) {
    return a * b.inverse();
  }

  /// Exact real comparison by raising both sides to lcm of the indices.
  friend std::strong_ordering operator<=>(const ExactRoot& a,
                                          const ExactRoot& b);
  friend bool operator==(const ExactRoot& a, const ExactRoot& b) {
    return a.index_ == b.index_ && a.radicand_ == b.radicand_;
  }

  /// `1` for the value one, otherwise `root(m,k)`.
  std::string to_string() const;

  /// Accepts `root(m,k)` or a plain positive rational.
  static ExactRoot parse(std::string_view text);

 private:
  void canonicalize();

  Rational radicand_{1};
  std::uint64_t index_ = 1;
};

std::strong_ordering compare(const ExactRoot& a, const ExactRoot& b);

inline std::ostream& operator<<(std::ostream& os, const ExactRoot& v) {
  return os << v.to_string();
}

}  // namespace wph
