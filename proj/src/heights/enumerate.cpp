#include "wph/heights/enumerate.hpp"

#include <algorithm>
#include <cmath>

#include "wph/errors.hpp"

namespace wph {

Integer projective_height_bound(const ExactRoot& bound, std::uint64_t power) {
  // floor((a/b)^{power/k}) = floor(floor(a^power / b^power)^{1/k})
  const Rational& m = bound.radicand();
  Integer whole = ipow(m.get_num(), power) / ipow(m.get_den(), power);
  Integer out;
  mpz_root(out.get_mpz_t(), whole.get_mpz_t(),
           static_cast<unsigned long>(bound.index()));
  return out;
}

std::vector<BoundedPoint> enumerate_bounded(const WeightSystem& w,
                                            const ExactRoot& bound,
                                            const FactorConfig& config,
                                            std::uint64_t max_candidates) {
  std::vector<BoundedPoint> out;
  if (bound < ExactRoot()) return out;

  const std::uint64_t q = w.weight_product();
  Integer h_bound = projective_height_bound(bound, q);
  double box = 2.0 * h_bound.get_d() + 1.0;
  if (!h_bound.fits_slong_p() ||
      std::pow(box, static_cast<double>(w.size())) >
          static_cast<double>(max_candidates)) {
    throw DomainError("enumeration box too large: projective height bound " +
                      to_string(h_bound) + " in " + std::to_string(w.size()) +
                      " coordinates");
  }

  for_each_projective_point(
      w.size(), h_bound.get_si(), [&](const std::vector<std::int64_t>& v) {
        std::vector<Integer> coords(v.begin(), v.end());
        ProjectivePoint y(std::move(coords));
        std::vector<WeightedPoint> fiber = phi_fiber(y, w, config);
        if (fiber.empty()) return;
        ExactRoot height(Rational(weil_height(y)), q);
        for (auto& x : fiber) out.push_back({std::move(x), height});
      });

  std::sort(out.begin(), out.end(),
            [](const BoundedPoint& a, const BoundedPoint& b) {
              auto c = a.height <=> b.height;
              if (c != 0) return c < 0;
              return a.point.coords() < b.point.coords();
            });
  return out;
}

std::uint64_t counting_function(const WeightSystem& w, const ExactRoot& bound,
                                const FactorConfig& config) {
  return enumerate_bounded(w, bound, config).size();
}

}  // namespace wph
