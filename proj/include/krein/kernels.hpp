#pragma once

// Data-parallel inner loops. Every kernel has a plain serial reference in
// `serial` and an OpenMP version in `omp` with identical results up to
// floating-point reassociation; tests and bench_kernels compare the two.

#include <functional>
#include <span>
#include <vector>

#include "krein/types.hpp"

namespace krein::kernels {

/// Decaying solution of i u' - mu u = g with zero homogeneous component on
/// the side where e^{-i mu x} decays. g is taken to vanish outside
/// [-support, support].
struct ParticularProblem {
  cplx mu;
  std::function<Vec2(double)> source;
  double support = 12.0;
  double max_panel = 0.05;
};

enum class Side { Left, Right };

namespace serial {

/// max over lambda of dist(conj(lambda), spectrum).
double pairing_residual(std::span<const cplx> spectrum);

/// Greedy nearest-neighbour matching of two multisets; largest matched distance.
double matched_distance(std::span<const cplx> a, std::span<const cplx> b);

/// Particular solution at points xs of one half-line (x = 0 means 0- or 0+).
void sample_particular(const ParticularProblem& p, std::span<const double> xs, Side side,
                       std::span<Vec2> out);

/// Runs task(0..count-1) in order.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace serial

namespace omp {

double pairing_residual(std::span<const cplx> spectrum);
double matched_distance(std::span<const cplx> a, std::span<const cplx> b);
void sample_particular(const ParticularProblem& p, std::span<const double> xs, Side side,
                       std::span<Vec2> out);

/// Parallel index loop; the exception of the lowest failing index is rethrown
/// after the loop.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& task);

int max_threads();

}  // namespace omp

}  // namespace krein::kernels
