#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace krein::quad {

inline constexpr std::array<double, 10> kNodes{
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244, -0.4333953941292472,
    -0.14887433898163122, 0.14887433898163122, 0.4333953941292472, 0.6794095682990244,
    0.8650633666889845, 0.9739065285171717};
inline constexpr std::array<double, 10> kWeights{
    0.06667134430868807, 0.14945134915058036, 0.219086362515982, 0.2692667193099965,
    0.295524224714753, 0.295524224714753, 0.2692667193099965, 0.219086362515982,
    0.14945134915058036, 0.06667134430868807};

/// Composite 10-point Gauss-Legendre rule on [a, b] with panels no wider than
/// `max_panel`. `zero` fixes the accumulator type (double, complex, Eigen vector).
template <typename F, typename T>
T integrate(F&& f, double a, double b, double max_panel, T zero) {
  T sum = zero;
  if (b == a) return sum;
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / max_panel)));
  const double w = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * w;
    for (std::size_t k = 0; k < kNodes.size(); ++k) {
      sum += (0.5 * w * kWeights[k]) * f(mid + 0.5 * w * kNodes[k]);
    }
  }
  return sum;
}

}  // namespace krein::quad
