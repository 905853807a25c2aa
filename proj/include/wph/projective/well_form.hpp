#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wph/projective/point.hpp"
#include "wph/wgcd/weight_system.hpp"

namespace wph {

/// True iff dropping any single weight leaves gcd 1. A one-coordinate
/// system is well formed only as (1).
bool is_well_formed(const WeightSystem& w);

struct TruncationStep {
  std::uint64_t divisor = 1;
  /// Empty for the global step (every weight divided); otherwise the one
  /// index whose weight is kept.
  std::optional<std::size_t> pivot;

  bool operator==(const TruncationStep&) const = default;
};

struct WellFormingResult {
  WeightSystem new_weights;
  std::vector<TruncationStep> steps;
};

/// Global gcd division first, then pivot truncations scanned in increasing
/// index, repeated until the system is well formed.
WellFormingResult well_form(const WeightSystem& w);

/// Replays steps on w; replay(w, well_form(w).steps) == new_weights.
WeightSystem replay_steps(const WeightSystem& w,
                          const std::vector<TruncationStep>& steps);

/// Carries a point across the isomorphism: each pivot step with divisor d
/// raises the pivot coordinate to the d-th power, global steps leave the
/// coordinates alone.
WeightedPoint transport_point(const WeightedPoint& p,
                              const WellFormingResult& result);

}  // namespace wph
