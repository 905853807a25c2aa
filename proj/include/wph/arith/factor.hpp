#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "wph/arith/numbers.hpp"

namespace wph {

/// Effort limits for factorize(). The defaults handle any input whose
/// second-largest prime factor is below roughly 10^18.
struct FactorConfig {
  /// Primes below this bound are removed by trial division.
  std::uint64_t trial_bound = 1'000'000;
  /// Pollard-rho iteration budget per composite cofactor, across restarts.
  std::uint64_t rho_iterations = 1ULL << 24;
  /// Mixed with a hash of the cofactor to seed each rho run.
  std::uint64_t seed = 0;
};

const FactorConfig& default_factor_config();

/// Signed prime-power decomposition of a nonzero rational. Exponents are
/// nonzero; negative exponents come from the denominator.
class Factorization {
 public:
  Factorization() = default;
  Factorization(int sign, std::map<Integer, std::int64_t> factors);

  int sign() const noexcept { return sign_; }
  const std::map<Integer, std::int64_t>& factors() const noexcept {
    return factors_;
  }

  /// Exponent of p (0 when p does not occur).
  std::int64_t exponent(const Integer& p) const;

  /// sign * prod p^e.
  Rational reconstruct() const;

  bool operator==(const Factorization&) const = default;

 private:
  int sign_ = 1;
  std::map<Integer, std::int64_t> factors_;
};

/// Deterministic primality. Strong-pseudoprime test with the first 13
/// prime bases below 3.317e24 (proven); above that, Miller's test with
/// every base up to 2 ln(n)^2, which is deterministic under GRH.
bool is_prime(const Integer& n);

/// Exact factorization. Throws DomainError on 0 and FactorizationIncomplete
/// when a composite cofactor survives the rho budget.
Factorization factorize(const Integer& n,
                        const FactorConfig& config = default_factor_config());
Factorization factorize(const Rational& r,
                        const FactorConfig& config = default_factor_config());

/// Exponent of the prime p in r. Throws DomainError for r = 0 or p < 2.
std::int64_t valuation(const Rational& r, const Integer& p);

/// max(valuation(r, p), 0).
std::int64_t plus_valuation(const Rational& r, const Integer& p);

namespace detail {
/// Nontrivial factor of an odd composite n that is not a perfect power,
/// or 0 when the budget runs out.
Integer pollard_brent(const Integer& n, std::uint64_t seed,
                      std::uint64_t budget);
}  // namespace detail

}  // namespace wph
