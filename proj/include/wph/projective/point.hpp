#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wph/arith/exact_root.hpp"
#include "wph/arith/factor.hpp"
#include "wph/wgcd/weight_system.hpp"

namespace wph {

/// Representative (x_0, ..., x_n) of a point of weighted projective space
/// over the rationals.
class WeightedPoint {
 public:
  /// Throws LengthMismatchError or ZeroTupleError.
  WeightedPoint(std::vector<Rational> coords, WeightSystem weights);

  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const WeightSystem& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return coords_.size(); }

  bool is_integral() const;

  /// Integer coordinates; throws DomainError unless is_integral().
  WeightedTuple as_tuple() const;

  /// `[x0:x1:...:xn]`
  std::string to_string() const;

  bool operator==(const WeightedPoint& other) const = default;

 private:
  std::vector<Rational> coords_;
  WeightSystem weights_;
};

inline std::ostream& operator<<(std::ostream& os, const WeightedPoint& p) {
  return os << p.to_string();
}

/// lambda * x = (lambda^{q_0} x_0, ..., lambda^{q_n} x_n).
WeightedPoint scale(const WeightedPoint& p, const Rational& lambda);

/// Least positive integer N with N^{q_i} x_i integral for every i.
Integer denominator_clearing_scalar(
    const WeightedPoint& p,
    const FactorConfig& config = default_factor_config());

/// (1 / wgcd(p)) * p for integral p. The result has wgcd 1.
WeightedPoint normalize(const WeightedPoint& p,
                        const FactorConfig& config = default_factor_config());

/// Coordinates divided by awgcd(p)^{q_i}. The result has awgcd 1.
WeightedPoint absolutely_normalize(
    const WeightedPoint& p,
    const FactorConfig& config = default_factor_config());

/// A rational lambda with scale(p, lambda) == r, if any. The positive
/// witness is preferred. Throws DomainError when weights differ.
std::optional<Rational> equivalent(const WeightedPoint& p,
                                   const WeightedPoint& r);

/// Deterministic representative of the class of p under rational scalars:
/// denominators cleared, normalized, then the lexicographically smaller of
/// the two sign representatives y and (-1) * y, ordering coordinates as
/// 0 < 1 < -1 < 2 < -2 < ...
WeightedPoint canonical_rep(
    const WeightedPoint& p,
    const FactorConfig& config = default_factor_config());

/// Representative of the class of p under all nonzero algebraic scalars.
///
/// Two rational tuples with support I are related by such a scalar
/// exactly when they are related by a rational scalar acting through the
/// support weights divided by their gcd. The representative is therefore
/// canonical_rep() of the support coordinates under those reduced weights,
/// padded back with zeros.
WeightedPoint geometric_rep(
    const WeightedPoint& p,
    const FactorConfig& config = default_factor_config());

/// max_i |y_i|^{1/q_i} over the nonzero coordinates of canonical_rep(p).
/// Depends on the representative convention when the weights are not
/// well formed.
ExactRoot naive_size(const WeightedPoint& p,
                     const FactorConfig& config = default_factor_config());

}  // namespace wph
