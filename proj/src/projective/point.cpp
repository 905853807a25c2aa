#include "wph/projective/point.hpp"

#include <algorithm>
#include <map>

#include "wph/errors.hpp"
#include "wph/wgcd/wgcd.hpp"

namespace wph {

WeightedPoint::WeightedPoint(std::vector<Rational> coords, WeightSystem weights)
    : coords_(std::move(coords)), weights_(std::move(weights)) {
  if (coords_.size() != weights_.size()) {
    throw LengthMismatchError("point has " + std::to_string(coords_.size()) +
                              " coordinates but " +
                              std::to_string(weights_.size()) + " weights");
  }
  bool any = false;
  for (auto& x : coords_) {
    x.canonicalize();
    any = any || x != 0;
  }
  if (!any) throw ZeroTupleError("all coordinates are zero");
}

bool WeightedPoint::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& x) { return x.get_den() == 1; });
}

WeightedTuple WeightedPoint::as_tuple() const {
  if (!is_integral()) {
    throw DomainError("point has non-integral coordinates; clear denominators "
                      "first");
  }
  std::vector<Integer> ints;
  ints.reserve(coords_.size());
  for (const auto& x : coords_) ints.push_back(x.get_num());
  return WeightedTuple(std::move(ints), weights_);
}

std::string WeightedPoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ':';
    out += wph::to_string(coords_[i]);
  }
  return out + "]";
}

WeightedPoint scale(const WeightedPoint& p, const Rational& lambda) {
  if (lambda == 0) throw DomainError("scale: lambda must be nonzero");
  std::vector<Rational> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.push_back(p.coords()[i] *
                  rpow(lambda, static_cast<std::int64_t>(p.weights()[i])));
  }
  return WeightedPoint(std::move(out), p.weights());
}

Integer denominator_clearing_scalar(const WeightedPoint& p,
                                    const FactorConfig& config) {
  // Per prime l the exponent t must satisfy q_i t >= v_l(den_i).
  std::map<Integer, std::int64_t> need;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Integer& den = p.coords()[i].get_den();
    if (den == 1) continue;
    auto q = static_cast<std::int64_t>(p.weights()[i]);
    Factorization f = factorize(den, config);
    for (const auto& [l, e] : f.factors()) {
      std::int64_t t = (e + q - 1) / q;
      auto& slot = need[l];
      slot = std::max(slot, t);
    }
  }
  Integer n = 1;
  for (const auto& [l, t] : need) n *= ipow(l, static_cast<std::uint64_t>(t));
  return n;
}

WeightedPoint normalize(const WeightedPoint& p, const FactorConfig& config) {
  Integer d = wgcd(p.as_tuple(), config);
  if (d == 1) return p;
  return scale(p, Rational(Integer(1), d));
}

WeightedPoint absolutely_normalize(const WeightedPoint& p,
                                   const FactorConfig& config) {
  ExactRoot d = awgcd(p.as_tuple(), config);
  if (d.is_one()) return p;
  std::vector<Rational> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    // The canonical index divides weight_gcd, hence every q_i.
    out.push_back(p.coords()[i] / *d.rational_power(p.weights()[i]));
  }
  return WeightedPoint(std::move(out), p.weights());
}

std::optional<Rational> equivalent(const WeightedPoint& p,
                                   const WeightedPoint& r) {
  if (!(p.weights() == r.weights())) {
    throw DomainError("equivalent: weight systems differ");
  }
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((p.coords()[i] == 0) != (r.coords()[i] == 0)) return std::nullopt;
    if (!pivot && p.coords()[i] != 0) pivot = i;
  }
  Rational ratio = r.coords()[*pivot] / p.coords()[*pivot];
  ExactRoot magnitude(abs(ratio), p.weights()[*pivot]);
  if (!magnitude.is_rational()) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational lambda = sign * magnitude.radicand();
    if (scale(p, lambda) == r) return lambda;
  }
  return std::nullopt;
}

namespace {

// Lexicographic in the coordinate order 0 < 1 < -1 < 2 < -2 < ...
bool sign_order_less(const std::vector<Rational>& a,
                     const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(abs(a[i]), abs(b[i]));
    if (c != 0) return c < 0;
    if (sgn(a[i]) != sgn(b[i])) return sgn(a[i]) > sgn(b[i]);
  }
  return false;
}

}  // namespace

WeightedPoint canonical_rep(const WeightedPoint& p,
                            const FactorConfig& config) {
  WeightedPoint integral = p;
  if (!p.is_integral()) {
    integral = scale(p, Rational(denominator_clearing_scalar(p, config)));
  }
  WeightedPoint y = normalize(integral, config);
  WeightedPoint flipped = scale(y, Rational(-1));
  return sign_order_less(flipped.coords(), y.coords()) ? flipped : y;
}

WeightedPoint geometric_rep(const WeightedPoint& p,
                            const FactorConfig& config) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.coords()[i] != 0) support.push_back(i);
  }
  WeightSystem sub_weights = p.weights().restricted(support);
  auto reduced = sub_weights.reduced_weights();
  std::vector<Rational> sub_coords;
  for (std::size_t i : support) sub_coords.push_back(p.coords()[i]);
  WeightedPoint sub(std::move(sub_coords),
                    WeightSystem({reduced.begin(), reduced.end()}));
  WeightedPoint rep = canonical_rep(sub, config);
  std::vector<Rational> out(p.size(), Rational(0));
  for (std::size_t k = 0; k < support.size(); ++k) {
    out[support[k]] = rep.coords()[k];
  }
  return WeightedPoint(std::move(out), p.weights());
}

ExactRoot naive_size(const WeightedPoint& p, const FactorConfig& config) {
  WeightedPoint y = canonical_rep(p, config);
  std::optional<ExactRoot> best;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y.coords()[i] == 0) continue;
    ExactRoot v(abs(y.coords()[i]), y.weights()[i]);
    if (!best || *best < v) best = v;
  }
  return *best;
}

}  // namespace wph
