#include <algorithm>
#include <limits>

#include "kernels_detail.hpp"

namespace krein::kernels::serial {

double pairing_residual(std::span<const cplx> spectrum) {
  double worst = 0.0;
  for (const cplx& l : spectrum) {
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& m : spectrum) best = std::min(best, std::abs(std::conj(l) - m));
    worst = std::max(worst, best);
  }
  return worst;
}

double matched_distance(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const cplx& x : a) {
    std::size_t pick = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        pick = j;
      }
    }
    used[pick] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

void sample_particular(const ParticularProblem& p, std::span<const double> xs, Side side,
                       std::span<Vec2> out) {
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = detail::particular_at(p, xs[i], side);
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& task) {
  for (std::size_t i = 0; i < count; ++i) task(i);
}

}  // namespace krein::kernels::serial
