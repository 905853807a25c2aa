#include "wph/wgcd/weight_system.hpp"

#include <numeric>

#include "wph/errors.hpp"

namespace wph {

WeightSystem::WeightSystem(std::vector<std::uint64_t> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("weight system is empty");
  gcd_ = 0;
  for (std::uint64_t q : weights_) {
    if (q == 0) throw DomainError("weights must be positive");
    gcd_ = std::gcd(gcd_, q);
    if (__builtin_mul_overflow(product_, q, &product_) ||
        product_ > (1ULL << 62)) {
      throw DomainError("weight product too large");
    }
  }
  reduced_.reserve(weights_.size());
  for (std::uint64_t q : weights_) reduced_.push_back(q / gcd_);
}

WeightSystem WeightSystem::restricted(
    std::span<const std::size_t> indices) const {
  std::vector<std::uint64_t> sub;
  sub.reserve(indices.size());
  for (std::size_t i : indices) sub.push_back(weights_.at(i));
  return WeightSystem(std::move(sub));
}

std::string WeightSystem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out;
}

WeightedTuple::WeightedTuple(std::vector<Integer> coords, WeightSystem weights)
    : coords_(std::move(coords)), weights_(std::move(weights)) {
  if (coords_.size() != weights_.size()) {
    throw LengthMismatchError("tuple has " + std::to_string(coords_.size()) +
                              " coordinates but " +
                              std::to_string(weights_.size()) + " weights");
  }
  bool any = false;
  for (const auto& x : coords_) any = any || x != 0;
  if (!any) throw ZeroTupleError("all coordinates are zero");
}

}  // namespace wph
