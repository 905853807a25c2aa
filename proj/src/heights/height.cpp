#include "wph/heights/height.hpp"

#include <map>
#include <set>

#include "wph/errors.hpp"
#include "wph/wgcd/wgcd.hpp"

namespace wph {

ProjectivePoint ProjectivePoint::from_rationals(
    const std::vector<Rational>& coords) {
  Integer den_lcm = 1;
  bool any = false;
  for (const auto& x : coords) {
    if (x != 0) any = true;
    den_lcm = lcm(den_lcm, x.get_den());
  }
  if (!any) throw ZeroTupleError("all coordinates are zero");
  ProjectivePoint out;
  Integer g = 0;
  for (const auto& x : coords) {
    Rational scaled = x * den_lcm;
    out.coords_.push_back(scaled.get_num());
    g = gcd(g, out.coords_.back());
  }
  int sign = 1;
  for (const auto& c : out.coords_) {
    if (c != 0) {
      sign = sgn(c);
      break;
    }
  }
  for (auto& c : out.coords_) {
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (sign < 0) c = -c;
  }
  return out;
}

ProjectivePoint::ProjectivePoint(std::vector<Integer> coords)
    : coords_(std::move(coords)) {
  Integer g = 0;
  std::optional<int> first_sign;
  for (const auto& c : coords_) {
    g = gcd(g, c);
    if (!first_sign && c != 0) first_sign = sgn(c);
  }
  if (!first_sign) throw ZeroTupleError("all coordinates are zero");
  if (g != 1 || *first_sign < 0) {
    throw DomainError("projective point is not gcd- and sign-normalized");
  }
}

std::string ProjectivePoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ':';
    out += wph::to_string(coords_[i]);
  }
  return out + "]";
}

ProjectivePoint phi(const WeightedPoint& p) {
  const std::uint64_t q = p.weights().weight_product();
  // Scaling by the lcm of the denominators makes every coordinate
  // integral without changing the class.
  Integer den_lcm = 1;
  for (const auto& x : p.coords()) den_lcm = lcm(den_lcm, x.get_den());
  WeightedPoint integral = den_lcm == 1 ? p : scale(p, Rational(den_lcm));
  std::vector<Rational> powered;
  powered.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    powered.emplace_back(
        ipow(integral.coords()[i].get_num(), q / p.weights()[i]));
  }
  return ProjectivePoint::from_rationals(powered);
}

Integer weil_height(const ProjectivePoint& y) {
  Integer best = 0;
  for (const auto& c : y.coords()) {
    if (abs(c) > best) best = abs(c);
  }
  return best;
}

ExactRoot weighted_height(const WeightedPoint& p) {
  return ExactRoot(Rational(weil_height(phi(p))),
                   p.weights().weight_product());
}

ExactRoot weighted_height_direct(const WeightedPoint& p,
                                 const FactorConfig& config) {
  std::vector<std::size_t> nonzero;
  std::vector<Factorization> parts;
  std::set<Integer> primes;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.coords()[i] == 0) continue;
    nonzero.push_back(i);
    parts.push_back(factorize(p.coords()[i], config));
    for (const auto& [l, e] : parts.back().factors()) primes.insert(l);
  }

  ExactRoot archimedean(abs(p.coords()[nonzero.front()]),
                        p.weights()[nonzero.front()]);
  for (std::size_t k = 1; k < nonzero.size(); ++k) {
    ExactRoot v(abs(p.coords()[nonzero[k]]), p.weights()[nonzero[k]]);
    if (archimedean < v) archimedean = v;
  }

  ExactRoot total = archimedean;
  for (const auto& l : primes) {
    // max_i |x_i|_l^{1/q_i} = l^{-min_i v_l(x_i)/q_i}
    std::optional<Rational> lowest;
    for (std::size_t k = 0; k < nonzero.size(); ++k) {
      Rational v(Integer(std::to_string(parts[k].exponent(l))),
                 Integer(std::to_string(p.weights()[nonzero[k]])));
      v.canonicalize();
      if (!lowest || v < *lowest) lowest = v;
    }
    if (*lowest != 0) {
      total = total * ExactRoot::power_of(Rational(l), -*lowest);
    }
  }
  return total;
}

double log_weighted_height(const WeightedPoint& p) {
  return log_value(weighted_height(p));
}

KroneckerReport kronecker_check(const WeightedPoint& p) {
  KroneckerReport report;
  report.height_one = weighted_height(p).is_one();
  for (std::size_t i = 0; i < p.size() && !report.ratio_condition; ++i) {
    const Rational& xi = p.coords()[i];
    if (xi == 0) continue;
    const std::uint64_t qi = p.weights()[i];
    if (xi < 0 && qi % 2 == 0) continue;
    ExactRoot magnitude(abs(xi), qi);
    if (!magnitude.is_rational()) continue;
    Rational root = xi < 0 ? Rational(-magnitude.radicand())
                           : magnitude.radicand();
    bool ok = true;
    for (std::size_t j = 0; j < p.size() && ok; ++j) {
      Rational ratio =
          p.coords()[j] / rpow(root, static_cast<std::int64_t>(p.weights()[j]));
      ok = ratio == 0 || ratio == 1 || ratio == -1;
    }
    report.ratio_condition = ok;
  }
  return report;
}

namespace {

// Solves t = a_i (mod m_i) for all i; returns (t, lcm) or nullopt.
std::optional<std::pair<Integer, Integer>> solve_congruences(
    const std::vector<std::pair<Integer, Integer>>& system) {
  Integer r = 0;
  Integer m = 1;
  for (const auto& [a, mod] : system) {
    Integer g = gcd(m, mod);
    Integer diff = a - r;
    if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
    Integer m_red = m / g;
    Integer mod_red = mod / g;
    Integer inv = 0;
    if (mod_red != 1) {
      mpz_invert(inv.get_mpz_t(), m_red.get_mpz_t(), mod_red.get_mpz_t());
    }
    Integer k = (diff / g) * inv;
    mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), mod_red.get_mpz_t());
    r += m * k;
    m *= mod_red;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  }
  return std::make_pair(r, m);
}

struct FiberData {
  std::vector<std::size_t> support;
  std::vector<std::uint64_t> exponents;  // Q / q_i on the support
  std::vector<Integer> magnitudes;       // |x_i| on the support
};

// |mu| = prod l^{t_l} with t_l the least residue solving
// t = -v_l(y_i) mod Q/q_i; primes outside the support of y take t = 0.
std::optional<FiberData> fiber_magnitudes(const ProjectivePoint& y,
                                          const WeightSystem& w,
                                          const FactorConfig& config) {
  if (y.size() != w.size()) {
    throw LengthMismatchError("projective point and weights differ in length");
  }
  const std::uint64_t q = w.weight_product();
  FiberData data;
  std::vector<Factorization> parts;
  std::set<Integer> primes;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y.coords()[i] == 0) continue;
    data.support.push_back(i);
    data.exponents.push_back(q / w[i]);
    parts.push_back(factorize(y.coords()[i], config));
    for (const auto& [l, e] : parts.back().factors()) primes.insert(l);
  }
  Integer mu = 1;
  for (const auto& l : primes) {
    std::vector<std::pair<Integer, Integer>> system;
    for (std::size_t k = 0; k < data.support.size(); ++k) {
      Integer mod(std::to_string(data.exponents[k]));
      Integer a(std::to_string(-parts[k].exponent(l)));
      mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
      system.emplace_back(a, mod);
    }
    auto solution = solve_congruences(system);
    if (!solution) return std::nullopt;
    mu *= ipow(l, solution->first.get_ui());
  }
  for (std::size_t k = 0; k < data.support.size(); ++k) {
    Integer root;
    Integer target = mu * abs(y.coords()[data.support[k]]);
    if (!exact_integer_root(target, data.exponents[k], root)) {
      throw std::logic_error("phi_fiber: residue solution is not exact");
    }
    data.magnitudes.push_back(root);
  }
  return data;
}

// Sign patterns compatible with x_i^{e_i} = mu * y_i, positive scalar
// first, then increasing bit masks over the even exponents.
template <typename Visit>
void for_each_signed_candidate(const ProjectivePoint& y, const WeightSystem& w,
                               const FiberData& data, Visit&& visit) {
  std::vector<std::size_t> free_slots;
  for (std::size_t k = 0; k < data.support.size(); ++k) {
    if (data.exponents[k] % 2 == 0) free_slots.push_back(k);
  }
  for (int mu_sign : {1, -1}) {
    bool feasible = true;
    for (std::size_t k : free_slots) {
      feasible = feasible && mu_sign * sgn(y.coords()[data.support[k]]) > 0;
    }
    if (!feasible) continue;
    const std::uint64_t patterns = 1ULL << free_slots.size();
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      std::vector<Rational> coords(y.size(), Rational(0));
      for (std::size_t k = 0; k < data.support.size(); ++k) {
        int s = mu_sign * sgn(y.coords()[data.support[k]]);
        coords[data.support[k]] = Rational(s * data.magnitudes[k]);
      }
      for (std::size_t b = 0; b < free_slots.size(); ++b) {
        if (mask >> b & 1) {
          auto& c = coords[data.support[free_slots[b]]];
          c = -c;
        }
      }
      if (!visit(WeightedPoint(std::move(coords), w))) return;
    }
  }
}

}  // namespace

std::vector<WeightedPoint> phi_fiber(const ProjectivePoint& y,
                                     const WeightSystem& w,
                                     const FactorConfig& config) {
  std::vector<WeightedPoint> out;
  auto data = fiber_magnitudes(y, w, config);
  if (!data) return out;
  for_each_signed_candidate(y, w, *data, [&](WeightedPoint x) {
    WeightedPoint rep = geometric_rep(x, config);
    bool seen = false;
    for (const auto& existing : out) seen = seen || existing == rep;
    if (!seen) out.push_back(std::move(rep));
    return true;
  });
  return out;
}

std::optional<WeightedPoint> phi_preimage(const ProjectivePoint& y,
                                          const WeightSystem& w,
                                          const FactorConfig& config) {
  auto data = fiber_magnitudes(y, w, config);
  if (!data) return std::nullopt;
  std::optional<WeightedPoint> first;
  for_each_signed_candidate(y, w, *data, [&](WeightedPoint x) {
    first = std::move(x);
    return false;
  });
  return first;
}

}  // namespace wph
