#pragma once

#include <algorithm>

#include "krein/kernels.hpp"
#include "krein/quadrature.hpp"

namespace krein::kernels::detail {

// x is the signed position; x = 0 is read as 0- on the left and 0+ on the right.
inline Vec2 particular_at(const ParticularProblem& p, double x, Side side) {
  const cplx mu = p.mu;
  auto kernel = [&](double s) -> Vec2 { return std::exp(-I_unit * mu * (x - s)) * p.source(s); };
  const double s = p.support;
  double lo, hi;
  cplx factor;
  if (mu.imag() > 0.0) {
    lo = x;
    hi = side == Side::Right ? s : 0.0;
    factor = I_unit;
  } else {
    lo = side == Side::Left ? -s : 0.0;
    hi = x;
    factor = -I_unit;
  }
  lo = std::max(lo, -s);
  hi = std::min(hi, s);
  if (hi <= lo) return Vec2::Zero();
  return factor * quad::integrate(kernel, lo, hi, p.max_panel, Vec2(Vec2::Zero()));
}

}  // namespace krein::kernels::detail
