#pragma once

#include <cstdint>
#include <span>

#include "wph/arith/exact_root.hpp"
#include "wph/arith/factor.hpp"
#include "wph/wgcd/weight_system.hpp"

namespace wph {

/// Largest positive integer d with d^{q_i} | x_i for every i. Zero
/// coordinates impose no constraint; signs are ignored.
Integer wgcd(const WeightedTuple& x,
             const FactorConfig& config = default_factor_config());

/// Counters filled in by the recombining variants.
struct RecombineStats {
  /// Primes of gcd(x) inspected.
  std::uint64_t primes = 0;
  /// Total exponent decrements below the starting cap.
  std::uint64_t descents = 0;
  /// Primes whose exponent ended above min_j floor(s/q_j); that smaller
  /// cap is not an upper bound in general.
  std::uint64_t min_cap_exceeded = 0;
};

/// Same value as wgcd(), computed by factoring only g = gcd(x). With
/// s = v_p(g), each prime starts at floor(s / min_j q_j) and is lowered
/// until p^{e q_i} | x_i holds for every i; only divisibility checks
/// follow the single factorization.
Integer wgcd_via_gcd(const WeightedTuple& x,
                     const FactorConfig& config = default_factor_config(),
                     RecombineStats* stats = nullptr);

/// Largest real d with d^{q_i} an integer dividing x_i. The result is
/// (prod p^{a_p})^{1/weight_gcd} with a_p = min_i floor(v_p(x_i)/qbar_i).
ExactRoot awgcd(const WeightedTuple& x,
                const FactorConfig& config = default_factor_config());

/// Same value as awgcd(), recombined from the factorization of gcd(x).
ExactRoot awgcd_via_gcd(const WeightedTuple& x,
                        const FactorConfig& config = default_factor_config(),
                        RecombineStats* stats = nullptr);

/// prod_p p^{min_i floor(v_p^+(x_i)/q_i)} for rational coordinates; zeros
/// count as +infinity. Throws ZeroTupleError / LengthMismatchError.
Integer generalized_wgcd(std::span<const Rational> x, const WeightSystem& w,
                         const FactorConfig& config = default_factor_config());

/// (prod_p p^{min_i floor(v_p^+(x_i)/qbar_i)})^{1/weight_gcd}.
ExactRoot generalized_awgcd(
    std::span<const Rational> x, const WeightSystem& w,
    const FactorConfig& config = default_factor_config());

/// Natural logarithm, correctly rounded through a 128-bit MPFR evaluation.
double log_value(const ExactRoot& v);
double log_value(const Integer& v);

}  // namespace wph
