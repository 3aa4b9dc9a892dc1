#pragma once

// Reference computations used by the unit and acceptance tests. They avoid the
// library's own solution paths: boundary maps are written out in closed form
// and the resolvent is obtained by integrating the ODE with RK4.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;
inline const cplx I{0.0, 1.0};

inline Mat2 sigma1() { return (Mat2() << 0, 1, 1, 0).finished(); }
inline Mat2 sigma2() { return (Mat2() << 0, -I, I, 0).finished(); }
inline Mat2 sigma3() { return (Mat2() << 1, 0, 0, -1).finished(); }

// Shift model, components J = sigma3, R = sigma1, so iJR = -sigma2.
// V = [v+, R v+] with v+ the +1 eigenvector of iJR.
inline Mat2 shift_v() {
  const double r = 1.0 / std::sqrt(2.0);
  return (Mat2() << r, -I * r, -I * r, r).finished();
}

// Boundary maps on one-sided limits um = u(0-), up = u(0+).
inline Vec2 shift_gamma0(const Vec2& um, const Vec2& up) {
  return shift_v().adjoint() * (um + up) / std::sqrt(2.0);
}
inline Vec2 shift_gamma1(const Vec2& um, const Vec2& up) {
  return shift_v().adjoint() * (I * (um - up)) / std::sqrt(2.0);
}

// Image algebra of the shift triplet: J = sigma2, R = sigma1.
inline Mat2 shift_image_j_alpha(double a1, double a2, double a3) {
  const Mat2 j = sigma2(), r = sigma1();
  return a1 * j + a2 * r + a3 * (I * j * r);
}

// Haar unitary from QR of a complex Gaussian matrix.
inline Mat2 haar_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat2 z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z(i, j) = cplx(n(rng), n(rng));
  Eigen::HouseholderQR<Mat2> qr(z);
  Mat2 q = qr.householderQ();
  for (int k = 0; k < 2; ++k) q.col(k) *= qr.matrixQR()(k, k) / std::abs(qr.matrixQR()(k, k));
  return q;
}

struct ShiftSolution {
  std::vector<Vec2> left;   // at -xs[k]
  std::vector<Vec2> right;  // at  xs[k]
};

// Solves i u' - mu u = g on R \ {0} with L2 decay and the boundary condition
// U(J_alpha G1 + i G0) u = (J_alpha G1 - i G0) u. xs is a uniform grid on [0, L];
// `refine` RK4 steps are taken per grid cell.
inline ShiftSolution shift_resolvent(const Mat2& u, const Mat2& j_alpha, cplx mu,
                                     const std::function<Vec2(double)>& g,
                                     const std::vector<double>& xs, int refine = 10) {
  const std::size_t n = xs.size();
  const double h = (xs[1] - xs[0]) / refine;
  auto rhs = [&](double x, const Vec2& y) -> Vec2 { return -I * (mu * y + g(x)); };
  auto step = [&](double x, const Vec2& y, double dx) -> Vec2 {
    const Vec2 k1 = rhs(x, y);
    const Vec2 k2 = rhs(x + dx / 2, y + dx / 2 * k1);
    const Vec2 k3 = rhs(x + dx / 2, y + dx / 2 * k2);
    const Vec2 k4 = rhs(x + dx, y + dx * k3);
    return y + dx / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };
  // Integrate from the far ends toward 0 with zero data.
  ShiftSolution s{std::vector<Vec2>(n, Vec2::Zero()), std::vector<Vec2>(n, Vec2::Zero())};
  Vec2 y = Vec2::Zero();
  for (std::size_t k = n - 1; k > 0; --k) {
    for (int r = 0; r < refine; ++r) y = step(xs[k] - r * h, y, -h);
    s.right[k - 1] = y;
  }
  y = Vec2::Zero();
  for (std::size_t k = n - 1; k > 0; --k) {
    for (int r = 0; r < refine; ++r) y = step(-xs[k] + r * h, y, h);
    s.left[k - 1] = y;
  }
  // Homogeneous part e^{-i mu x} c on the half-line where it decays.
  const bool left_free = mu.imag() > 0.0;
  auto condition = [&](const Vec2& um, const Vec2& up) -> Vec2 {
    const Vec2 g0 = shift_gamma0(um, up), g1 = shift_gamma1(um, up);
    return u * (j_alpha * g1 + I * g0) - (j_alpha * g1 - I * g0);
  };
  const Vec2 base = condition(s.left[0], s.right[0]);
  Mat2 k;
  for (int c = 0; c < 2; ++c) {
    const Vec2 e = Vec2::Unit(c);
    k.col(c) = left_free ? condition(e, Vec2::Zero()) : condition(Vec2::Zero(), e);
    k.col(c) -= condition(Vec2::Zero(), Vec2::Zero());
  }
  const Vec2 c = k.fullPivLu().solve(-base);
  auto& side = left_free ? s.left : s.right;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = left_free ? -xs[i] : xs[i];
    side[i] += std::exp(-I * mu * x) * c;
  }
  return s;
}

}  // namespace oracle
