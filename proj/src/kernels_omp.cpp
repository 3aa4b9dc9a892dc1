#include <algorithm>
#include <exception>
#include <limits>

#include <omp.h>

#include "kernels_detail.hpp"

namespace krein::kernels::omp {

int max_threads() { return omp_get_max_threads(); }

double pairing_residual(std::span<const cplx> spectrum) {
  const auto n = static_cast<std::ptrdiff_t>(spectrum.size());
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const cplx target = std::conj(spectrum[i]);
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& m : spectrum) best = std::min(best, std::abs(target - m));
    worst = std::max(worst, best);
  }
  return worst;
}

double matched_distance(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  std::vector<double> dist(a.size() * b.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) dist[i * b.size() + j] = std::abs(a[i] - b[j]);
  }
  // The greedy pass is order dependent and stays serial.
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t pick = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && dist[i * b.size() + j] < best) {
        best = dist[i * b.size() + j];
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
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = detail::particular_at(p, xs[i], side);
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& task) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      task(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace krein::kernels::omp
