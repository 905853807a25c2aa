#pragma once

#include <numeric>
#include <vector>

namespace wph {

template <typename Visitor>
void for_each_projective_point(std::size_t length, std::int64_t h,
                               Visitor&& visit) {
  std::vector<std::int64_t> v(length, -h);
  while (true) {
    std::int64_t g = 0;
    std::size_t first = length;
    for (std::size_t i = 0; i < length; ++i) {
      if (v[i] != 0 && first == length) first = i;
      g = std::gcd(g, v[i] < 0 ? -v[i] : v[i]);
    }
    if (first < length && v[first] > 0 && g == 1) visit(v);
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (v[i] < h) {
        ++v[i];
        break;
      }
      v[i] = -h;
      if (i == 0) return;
    }
  }
}

}  // namespace wph
