#pragma once

#include <cstdint>
#include <vector>

#include "wph/arith/exact_root.hpp"
#include "wph/heights/height.hpp"

namespace wph {

struct BoundedPoint {
  WeightedPoint point;  // geometric_rep of its class
  ExactRoot height;
};

/// floor(B^Q), the bound on the Weil height of phi-images.
Integer projective_height_bound(const ExactRoot& bound, std::uint64_t power);

/// Every class of rational points with weighted_height <= bound, one
/// geometric_rep each, sorted by (height, coordinates).
///
/// Classes are taken under all nonzero algebraic scalars; under rational
/// scalars alone the set is infinite as soon as some weight exceeds 1,
/// e.g. [a:0] has height 1 in weights (2,3) for every rational a.
/// Completeness: a class of height <= B maps under phi to a point of Weil
/// height <= B^Q, and phi_fiber lists every class over each such point.
///
/// Throws DomainError when the projective box would exceed
/// `max_candidates` points.
std::vector<BoundedPoint> enumerate_bounded(
    const WeightSystem& w, const ExactRoot& bound,
    const FactorConfig& config = default_factor_config(),
    std::uint64_t max_candidates = 50'000'000);

std::uint64_t counting_function(
    const WeightSystem& w, const ExactRoot& bound,
    const FactorConfig& config = default_factor_config());

/// Visits every normalized projective point with coprime coordinates in
/// [-h, h]^{n+1}, first nonzero coordinate positive, in lexicographic order.
template <typename Visitor>
void for_each_projective_point(std::size_t length, std::int64_t h,
                               Visitor&& visit);

}  // namespace wph

#include "wph/heights/enumerate_impl.hpp"
