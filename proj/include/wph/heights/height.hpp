#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wph/arith/exact_root.hpp"
#include "wph/arith/factor.hpp"
#include "wph/projective/point.hpp"

namespace wph {

/// Integer point of ordinary projective space with coprime coordinates
/// and a positive first nonzero coordinate.
class ProjectivePoint {
 public:
  /// Scales any nonzero rational tuple to the normalized form.
  static ProjectivePoint from_rationals(const std::vector<Rational>& coords);

  /// Throws DomainError unless coords are already normalized.
  explicit ProjectivePoint(std::vector<Integer> coords);

  const std::vector<Integer>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }

  std::string to_string() const;

  bool operator==(const ProjectivePoint&) const = default;

 private:
  ProjectivePoint() = default;
  std::vector<Integer> coords_;
};

/// [x_0 : ... : x_n] -> [x_0^{Q/q_0} : ... : x_n^{Q/q_n}] with Q the
/// weight product. Constant on scalar classes.
ProjectivePoint phi(const WeightedPoint& p);

/// max |y_i| of a normalized point; its height over the rationals.
Integer weil_height(const ProjectivePoint& y);

/// Weil height of phi(p), taken to the 1/Q power.
ExactRoot weighted_height(const WeightedPoint& p);

/// Place-by-place evaluation: for each prime l dividing a numerator or
/// denominator, l^{-min_i v_l(x_i)/q_i} over the nonzero coordinates,
/// times the archimedean factor max_i |x_i|^{1/q_i}. Shares no code with
/// the phi route.
ExactRoot weighted_height_direct(
    const WeightedPoint& p,
    const FactorConfig& config = default_factor_config());

double log_weighted_height(const WeightedPoint& p);

struct KroneckerReport {
  /// weighted_height(p) == 1.
  bool height_one = false;
  /// Some nonzero x_i has a real q_i-th root xi in Q, and every ratio
  /// x_j / xi^{q_j} lies in {0, 1, -1}. Sufficient for height_one.
  bool ratio_condition = false;
};

KroneckerReport kronecker_check(const WeightedPoint& p);

/// All points x, one per class under algebraic scalars (as geometric_rep),
/// with phi(x) == y. Empty when y is not in the image.
std::vector<WeightedPoint> phi_fiber(
    const ProjectivePoint& y, const WeightSystem& w,
    const FactorConfig& config = default_factor_config());

/// One x with phi(x) == y, if any. The candidate with positive scalar
/// and positive roots is returned when it exists.
std::optional<WeightedPoint> phi_preimage(
    const ProjectivePoint& y, const WeightSystem& w,
    const FactorConfig& config = default_factor_config());

}  // namespace wph
