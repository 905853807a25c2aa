#include "wph/wgcd/wgcd.hpp"

#include <mpfr.h>

#include <algorithm>
#include <vector>

#include "wph/errors.hpp"

namespace wph {

namespace {

// prod_p p^{min_i floor(e_{p,i} / divisor_i)} over the given factorizations
// (one per nonzero coordinate). A prime missing from any factorization has
// minimum 0, so only primes common to all of them are visited.
Integer floor_min_product(const std::vector<Factorization>& parts,
                          const std::vector<std::uint64_t>& divisors) {
  Integer d = 1;
  if (parts.empty()) return d;
  for (const auto& [p, e0] : parts.front().factors()) {
    if (e0 <= 0) continue;
    std::int64_t best = e0 / static_cast<std::int64_t>(divisors.front());
    for (std::size_t i = 1; i < parts.size() && best > 0; ++i) {
      std::int64_t e = parts[i].exponent(p);
      if (e < 0) e = 0;
      best = std::min(best, e / static_cast<std::int64_t>(divisors[i]));
    }
    if (best > 0) d *= ipow(p, static_cast<std::uint64_t>(best));
  }
  return d;
}

struct NonzeroView {
  std::vector<Integer> values;  // absolute values of numerators
  std::vector<std::uint64_t> weights;
  std::vector<std::uint64_t> reduced;
};

NonzeroView nonzero_numerators(std::span<const Rational> x,
                               const WeightSystem& w) {
  if (x.size() != w.size()) {
    throw LengthMismatchError("tuple has " + std::to_string(x.size()) +
                              " coordinates but " + std::to_string(w.size()) +
                              " weights");
  }
  NonzeroView view;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    view.values.push_back(abs(x[i].get_num()));
    view.weights.push_back(w[i]);
    view.reduced.push_back(w.reduced_weights()[i]);
  }
  if (view.values.empty()) throw ZeroTupleError("all coordinates are zero");
  return view;
}

NonzeroView nonzero_integers(const WeightedTuple& x) {
  NonzeroView view;
  const auto& w = x.weights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.coords()[i] == 0) continue;
    view.values.push_back(abs(x.coords()[i]));
    view.weights.push_back(w[i]);
    view.reduced.push_back(w.reduced_weights()[i]);
  }
  return view;
}

std::vector<Factorization> factor_all(const std::vector<Integer>& values,
                                      const FactorConfig& config) {
  std::vector<Factorization> parts;
  parts.reserve(values.size());
  for (const auto& v : values) parts.push_back(factorize(v, config));
  return parts;
}

bool divides(const Integer& d, const Integer& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer recombine(const std::vector<Integer>& values,
                  const std::vector<std::uint64_t>& divisors,
                  const FactorConfig& config, RecombineStats* stats) {
  Integer g = 0;
  for (const auto& v : values) g = gcd(g, v);
  Factorization fg = factorize(g, config);
  auto smallest = static_cast<std::int64_t>(
      *std::min_element(divisors.begin(), divisors.end()));
  Integer d = 1;
  for (const auto& [p, s] : fg.factors()) {
    // s = v_p(x_k) for some k, so the exponent is at most s / q_k.
    std::int64_t e = s / smallest;
    std::int64_t min_cap = s;
    for (std::uint64_t q : divisors) {
      min_cap = std::min(min_cap, s / static_cast<std::int64_t>(q));
    }
    if (stats) ++stats->primes;
    while (e > 0) {
      bool ok = true;
      for (std::size_t i = 0; i < values.size() && ok; ++i) {
        ok = divides(ipow(p, static_cast<std::uint64_t>(e) * divisors[i]),
                     values[i]);
      }
      if (ok) break;
      --e;
      if (stats) ++stats->descents;
    }
    if (stats && e > min_cap) ++stats->min_cap_exceeded;
    if (e > 0) d *= ipow(p, static_cast<std::uint64_t>(e));
  }
  return d;
}

}  // namespace

Integer wgcd(const WeightedTuple& x, const FactorConfig& config) {
  NonzeroView view = nonzero_integers(x);
  return floor_min_product(factor_all(view.values, config), view.weights);
}

Integer wgcd_via_gcd(const WeightedTuple& x, const FactorConfig& config,
                     RecombineStats* stats) {
  NonzeroView view = nonzero_integers(x);
  return recombine(view.values, view.weights, config, stats);
}

ExactRoot awgcd(const WeightedTuple& x, const FactorConfig& config) {
  NonzeroView view = nonzero_integers(x);
  Integer core = floor_min_product(factor_all(view.values, config),
                                   view.reduced);
  return ExactRoot(Rational(core), x.weights().weight_gcd());
}

ExactRoot awgcd_via_gcd(const WeightedTuple& x, const FactorConfig& config,
                        RecombineStats* stats) {
  NonzeroView view = nonzero_integers(x);
  Integer core = recombine(view.values, view.reduced, config, stats);
  return ExactRoot(Rational(core), x.weights().weight_gcd());
}

Integer generalized_wgcd(std::span<const Rational> x, const WeightSystem& w,
                         const FactorConfig& config) {
  NonzeroView view = nonzero_numerators(x, w);
  return floor_min_product(factor_all(view.values, config), view.weights);
}

ExactRoot generalized_awgcd(std::span<const Rational> x, const WeightSystem& w,
                            const FactorConfig& config) {
  NonzeroView view = nonzero_numerators(x, w);
  Integer core = floor_min_product(factor_all(view.values, config),
                                   view.reduced);
  return ExactRoot(Rational(core), w.weight_gcd());
}

double log_value(const ExactRoot& v) {
  // Enough bits to hold the radicand exactly, so ln(1 + eps) keeps its
  // relative accuracy.
  const mpq_class& r = v.radicand();
  mpfr_prec_t bits = static_cast<mpfr_prec_t>(
      mpz_sizeinbase(r.get_num_mpz_t(), 2) +
      mpz_sizeinbase(r.get_den_mpz_t(), 2) + 128);
  mpfr_t value;
  mpfr_init2(value, bits);
  mpfr_set_q(value, v.radicand().get_mpq_t(), MPFR_RNDN);
  mpfr_log(value, value, MPFR_RNDN);
  mpfr_div_ui(value, value, static_cast<unsigned long>(v.index()), MPFR_RNDN);
  double out = mpfr_get_d(value, MPFR_RNDN);
  mpfr_clear(value);
  return out;
}

double log_value(const Integer& v) {
  if (v <= 0) throw DomainError("log_value: argument must be positive");
  return log_value(ExactRoot(Rational(v)));
}

}  // namespace wph
