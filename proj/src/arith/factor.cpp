#include "wph/arith/factor.hpp"

#include <memory>
#include <mutex>
#include <vector>

#include "wph/errors.hpp"

namespace wph {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t low_word(const Integer& n) {
  return static_cast<std::uint64_t>(mpz_getlimbn(n.get_mpz_t(), 0));
}

// Primes below a bound, sieved once per distinct larger bound and shared
// read-only afterwards.
class PrimeTable {
 public:
  static std::shared_ptr<const std::vector<std::uint32_t>> upto(
      std::uint64_t bound) {
    static std::mutex mutex;
    static std::shared_ptr<const std::vector<std::uint32_t>> cached;
    static std::uint64_t cached_bound = 0;
    std::lock_guard lock(mutex);
    if (!cached || cached_bound < bound) {
      cached = sieve(bound);
      cached_bound = bound;
    }
    return cached;
  }

 private:
  static std::shared_ptr<const std::vector<std::uint32_t>> sieve(
      std::uint64_t bound) {
    if (bound > 1'000'000'000ULL) throw DomainError("trial bound above 10^9");
    std::vector<bool> composite(bound + 1, false);
    auto primes = std::make_shared<std::vector<std::uint32_t>>();
    for (std::uint64_t i = 2; i < bound; ++i) {
      if (composite[i]) continue;
      primes->push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
  }
};

// Returns (root, k) with n = root^k and k maximal.
std::pair<Integer, unsigned long> perfect_power(const Integer& n) {
  Integer root = n;
  unsigned long total = 1;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    std::size_t bits = mpz_sizeinbase(root.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= bits; ++k) {
      Integer r;
      if (mpz_root(r.get_mpz_t(), root.get_mpz_t(), k) != 0) {
        root = r;
        total *= k;
        reduced = true;
        break;
      }
    }
  }
  return {root, total};
}

void add_factor(std::map<Integer, std::int64_t>& factors, const Integer& p,
                std::int64_t e) {
  auto it = factors.find(p);
  if (it == factors.end()) {
    factors.emplace(p, e);
  } else {
    it->second += e;
    if (it->second == 0) factors.erase(it);
  }
}

void factor_positive_into(const Integer& value, std::int64_t multiplicity,
                          const FactorConfig& config,
                          std::map<Integer, std::int64_t>& factors) {
  Integer m = value;
  if (m == 1) return;

  auto primes = PrimeTable::upto(config.trial_bound);
  std::size_t checked = 0;
  for (std::uint32_t p : *primes) {
    if (Integer(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      std::int64_t e = 0;
      do {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
      add_factor(factors, Integer(p), e * multiplicity);
      if (m == 1) return;
    }
    // A large prime cofactor would otherwise cost the whole table.
    if (++checked == 200 && is_prime(m)) break;
  }
  if (m == 1) return;

  std::vector<std::pair<Integer, std::int64_t>> pending{{m, multiplicity}};
  while (!pending.empty()) {
    auto [c, mult] = pending.back();
    pending.pop_back();
    if (c == 1) continue;
    if (is_prime(c)) {
      add_factor(factors, c, mult);
      continue;
    }
    auto [root, k] = perfect_power(c);
    if (k > 1) {
      pending.emplace_back(root, mult * static_cast<std::int64_t>(k));
      continue;
    }
    std::uint64_t seed = splitmix64(low_word(c) ^ splitmix64(config.seed));
    Integer d = detail::pollard_brent(c, seed, config.rho_iterations);
    if (d == 0) throw FactorizationIncomplete(to_string(c));
    Integer rest = c / d;
    pending.emplace_back(d, mult);
    pending.emplace_back(rest, mult);
  }
}

}  // namespace

const FactorConfig& default_factor_config() {
  static const FactorConfig config{};
  return config;
}

Factorization::Factorization(int sign, std::map<Integer, std::int64_t> factors)
    : sign_(sign < 0 ? -1 : 1), factors_(std::move(factors)) {
  for (auto it = factors_.begin(); it != factors_.end();) {
    it = it->second == 0 ? factors_.erase(it) : std::next(it);
  }
}

std::int64_t Factorization::exponent(const Integer& p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

Rational Factorization::reconstruct() const {
  Integer num = 1;
  Integer den = 1;
  for (const auto& [p, e] : factors_) {
    if (e > 0) {
      num *= ipow(p, static_cast<std::uint64_t>(e));
    } else {
      den *= ipow(p, static_cast<std::uint64_t>(-e));
    }
  }
  return make_rational(sign_ * num, den);
}

Factorization factorize(const Integer& n, const FactorConfig& config) {
  if (n == 0) throw DomainError("factorize: zero has no factorization");
  std::map<Integer, std::int64_t> factors;
  factor_positive_into(abs(n), 1, config, factors);
  return Factorization(sgn(n), std::move(factors));
}

Factorization factorize(const Rational& r, const FactorConfig& config) {
  if (r == 0) throw DomainError("factorize: zero has no factorization");
  std::map<Integer, std::int64_t> factors;
  factor_positive_into(abs(r.get_num()), 1, config, factors);
  factor_positive_into(r.get_den(), -1, config, factors);
  return Factorization(sgn(r), std::move(factors));
}

std::int64_t valuation(const Rational& r, const Integer& p) {
  if (r == 0) throw DomainError("valuation: zero has infinite valuation");
  if (p < 2) throw DomainError("valuation: base must be a prime");
  auto count = [&p](Integer m) {
    std::int64_t e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    return e;
  };
  return count(abs(r.get_num())) - count(r.get_den());
}

std::int64_t plus_valuation(const Rational& r, const Integer& p) {
  std::int64_t v = valuation(r, p);
  return v > 0 ? v : 0;
}

namespace detail {

Integer pollard_brent(const Integer& n, std::uint64_t seed,
                      std::uint64_t budget) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  std::uint64_t spent = 0;
  std::uint64_t state = seed;
  while (spent < budget) {
    state = splitmix64(state);
    Integer c = Integer(static_cast<unsigned long>(state % 0xffffffffULL)) % n;
    if (c == 0 || c == n - 2) c = 1;
    state = splitmix64(state);
    Integer y = Integer(static_cast<unsigned long>(state % 0xffffffffULL)) % n;
    Integer x, ys, g = 1, q = 1;
    const std::uint64_t batch = 128;
    std::uint64_t r = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      v %= n;
    };
    while (g == 1 && spent < budget) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          q = q * abs(Integer(x - y)) % n;
        }
        g = gcd(q, n);
        k += lim;
        spent += lim;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        step(ys);
        g = gcd(abs(Integer(x - ys)), n);
      }
    }
    if (g != n && g != 1) return g;
  }
  return Integer(0);
}

}  // namespace detail

}  // namespace wph
