#include "powres/modmath.hpp"

namespace powres {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d : {std::uint64_t{2}, std::uint64_t{3}}) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  // 6k +/- 1 wheel
  for (std::uint64_t d = 5; d <= n / d;) {
    for (std::uint64_t step : {std::uint64_t{2}, std::uint64_t{4}}) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      if (e) out.emplace_back(d, e);
      d += step;
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace powres
