#include "wph/projective/well_form.hpp"

#include <numeric>

#include "wph/errors.hpp"

namespace wph {

namespace {

std::uint64_t gcd_except(std::span<const std::uint64_t> w, std::size_t skip) {
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != skip) g = std::gcd(g, w[i]);
  }
  return g;
}

std::vector<std::uint64_t> apply_step(std::vector<std::uint64_t> w,
                                      const TruncationStep& step) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (step.pivot && *step.pivot == i) continue;
    if (w[i] % step.divisor != 0) {
      throw DomainError("truncation step does not divide the weights");
    }
    w[i] /= step.divisor;
  }
  return w;
}

}  // namespace

bool is_well_formed(const WeightSystem& w) {
  if (w.size() == 1) return w[0] == 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (gcd_except(w.weights(), i) != 1) return false;
  }
  return true;
}

WellFormingResult well_form(const WeightSystem& w) {
  std::vector<std::uint64_t> current(w.weights().begin(), w.weights().end());
  std::vector<TruncationStep> steps;
  while (!is_well_formed(WeightSystem(current))) {
    WeightSystem ws(current);
    if (ws.weight_gcd() > 1) {
      steps.push_back({ws.weight_gcd(), std::nullopt});
    } else {
      for (std::size_t j = 0; j < current.size(); ++j) {
        std::uint64_t d = gcd_except(current, j);
        if (d > 1) {
          steps.push_back({d, j});
          break;
        }
      }
    }
    current = apply_step(std::move(current), steps.back());
  }
  return {WeightSystem(std::move(current)), std::move(steps)};
}

WeightSystem replay_steps(const WeightSystem& w,
                          const std::vector<TruncationStep>& steps) {
  std::vector<std::uint64_t> current(w.weights().begin(), w.weights().end());
  for (const auto& step : steps) current = apply_step(std::move(current), step);
  return WeightSystem(std::move(current));
}

WeightedPoint transport_point(const WeightedPoint& p,
                              const WellFormingResult& result) {
  std::vector<Rational> coords = p.coords();
  for (const auto& step : result.steps) {
    if (!step.pivot) continue;
    coords[*step.pivot] =
        rpow(coords[*step.pivot], static_cast<std::int64_t>(step.divisor));
  }
  return WeightedPoint(std::move(coords), result.new_weights);
}

}  // namespace wph
