#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wph/arith/numbers.hpp"

namespace wph {

/// Positive integer grades (q_0, ..., q_n) of the coordinates.
///
/// weight_gcd() is the gcd of all grades and reduced_weights() the grades
/// divided by it. weight_product() is the full product q_0 * ... * q_n,
/// the exponent base of the map to ordinary projective space.
class WeightSystem {
 public:
  /// Throws DomainError when empty, when a weight is 0, or when the
  /// product does not fit in 63 bits.
  explicit WeightSystem(std::vector<std::uint64_t> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  std::uint64_t operator[](std::size_t i) const { return weights_[i]; }
  std::span<const std::uint64_t> weights() const noexcept { return weights_; }

  std::uint64_t weight_gcd() const noexcept { return gcd_; }
  std::uint64_t weight_product() const noexcept { return product_; }
  std::span<const std::uint64_t> reduced_weights() const noexcept {
    return reduced_;
  }

  /// Sub-system on the given coordinate indices.
  WeightSystem restricted(std::span<const std::size_t> indices) const;

  /// `q0,q1,...`
  std::string to_string() const;

  bool operator==(const WeightSystem& other) const {
    return weights_ == other.weights_;
  }

 private:
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> reduced_;
  std::uint64_t gcd_ = 1;
  std::uint64_t product_ = 1;
};

/// Integer coordinates bound to a weight system; not all zero.
class WeightedTuple {
 public:
  /// Throws LengthMismatchError or ZeroTupleError.
  WeightedTuple(std::vector<Integer> coords, WeightSystem weights);

  const std::vector<Integer>& coords() const noexcept { return coords_; }
  const WeightSystem& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return coords_.size(); }

 private:
  std::vector<Integer> coords_;
  WeightSystem weights_;
};

}  // namespace wph
