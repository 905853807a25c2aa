#include <array>
#include <cmath>

#include "wph/arith/factor.hpp"

namespace wph {

namespace {

constexpr std::array<unsigned, 13> kSmallBases = {2,  3,  5,  7,  11, 13, 17,
                                                  19, 23, 29, 31, 37, 41};

// psi_13 of Sorenson and Webster: every odd composite below it fails the
// strong test for at least one of the first 13 prime bases.
const Integer& base_set_limit() {
  static const Integer limit("3317044064679887385961981");
  return limit;
}

bool strong_probable_prime(const Integer& n, const Integer& n_minus_1,
                           const Integer& odd_part, unsigned long twos,
                           unsigned long base) {
  Integer a(base);
  a %= n;
  if (a == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), odd_part.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < twos; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned p : kSmallBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer n_minus_1 = n - 1;
  Integer odd_part = n_minus_1;
  unsigned long twos = mpz_scan1(odd_part.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(odd_part.get_mpz_t(), odd_part.get_mpz_t(), twos);

  if (n < base_set_limit()) {
    for (unsigned p : kSmallBases) {
      if (!strong_probable_prime(n, n_minus_1, odd_part, twos, p)) {
        return false;
      }
    }
    return true;
  }

  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  double ln_n = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
  auto limit = static_cast<unsigned long>(std::ceil(2.0 * ln_n * ln_n));
  for (unsigned long a = 2; a <= limit; ++a) {
    if (!strong_probable_prime(n, n_minus_1, odd_part, twos, a)) return false;
  }
  return true;
}

}  // namespace wph
