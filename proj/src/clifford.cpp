#include "krein/clifford.hpp"

#include <cmath>
#include <numbers>

namespace krein {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnitVector: return "NonUnitVector";
    case ErrorKind::AntipodalVectors: return "AntipodalVectors";
    case ErrorKind::LinearlyDependent: return "LinearlyDependent";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::MalformedSubspace: return "MalformedSubspace";
    case ErrorKind::GreenIdentityViolated: return "GreenIdentityViolated";
    case ErrorKind::SingularGamma0: return "SingularGamma0";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NotInResolventSet: return "NotInResolventSet";
    case ErrorKind::RealMu: return "RealMu";
    case ErrorKind::OddPotential: return "OddPotential";
    case ErrorKind::BadGrid: return "BadGrid";
    case ErrorKind::PredicateDegenerate: return "PredicateDegenerate";
    case ErrorKind::EigensolverFailure: return "EigensolverFailure";
    case ErrorKind::Config: return "Config";
  }
  return "Unknown";
}

SphereVec::SphereVec(double a1, double a2, double a3) : v_{a1, a2, a3} {
  const double n = std::sqrt(a1 * a1 + a2 * a2 + a3 * a3);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
    throw Error(ErrorKind::NonUnitVector, "|alpha| = " + std::to_string(n));
  }
}

SphereVec SphereVec::normalized(double a1, double a2, double a3) {
  const double n = std::sqrt(a1 * a1 + a2 * a2 + a3 * a3);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::NonUnitVector, "cannot normalize a zero vector");
  }
  return SphereVec(Unchecked{}, a1 / n, a2 / n, a3 / n);
}

SphereVec SphereVec::operator-() const { return SphereVec(Unchecked{}, -v_[0], -v_[1], -v_[2]); }

double dot(const SphereVec& a, const SphereVec& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> cross(const SphereVec& a, const SphereVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double distance(const SphereVec& a, const SphereVec& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

SphereVec random_sphere(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    const double x = normal(rng), y = normal(rng), z = normal(rng);
    if (x * x + y * y + z * z > 1e-12) return SphereVec::normalized(x, y, z);
  }
}

std::vector<SphereVec> orthogonal_circle(const SphereVec& alpha, int count) {
  // Seed axis: the coordinate direction least aligned with alpha.
  int axis = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(alpha[k]) < std::abs(alpha[axis])) axis = k;
  }
  std::array<double, 3> e{0.0, 0.0, 0.0};
  e[axis] = 1.0;
  const auto pc = cross(alpha, SphereVec(e[0], e[1], e[2]));
  const SphereVec p = SphereVec::normalized(pc[0], pc[1], pc[2]);
  const auto qc = cross(alpha, p);
  const SphereVec q = SphereVec::normalized(qc[0], qc[1], qc[2]);

  std::vector<SphereVec> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    const double t = 2.0 * std::numbers::pi * k / count;
    const double c = std::cos(t), s = std::sin(t);
    out.push_back(SphereVec::normalized(c * p[0] + s * q[0], c * p[1] + s * q[1], c * p[2] + s * q[2]));
  }
  return out;
}

double max_abs(const MatX& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool is_hermitian_involution(const MatX& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const auto id = MatX::Identity(m.rows(), m.cols());
  return max_abs(m - m.adjoint()) <= tol && max_abs(m * m - id) <= tol;
}

bool is_unitary(const MatX& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m * m.adjoint() - MatX::Identity(m.rows(), m.cols())) <= tol;
}

CliffordRep::CliffordRep(MatX j, MatX r) : j_(std::move(j)), r_(std::move(r)) {
  constexpr double tol = 1e-12;
  if (j_.rows() == 0 || j_.rows() != j_.cols() || r_.rows() != j_.rows() || r_.cols() != j_.cols()) {
    throw Error(ErrorKind::InvalidRepresentation, "J and R must be square of equal size");
  }
  if (!is_hermitian_involution(j_, tol) || !is_hermitian_involution(r_, tol)) {
    throw Error(ErrorKind::InvalidRepresentation, "J and R must be Hermitian involutions");
  }
  if (max_abs(j_ * r_ + r_ * j_) > tol) {
    throw Error(ErrorKind::InvalidRepresentation, "J and R must anti-commute");
  }
  const auto id = identity();
  for (const MatX* x : {&j_, &r_}) {
    if (max_abs(*x - id) <= tol || max_abs(*x + id) <= tol) {
      throw Error(ErrorKind::InvalidRepresentation, "J and R must differ from +-I");
    }
  }
  ijr_ = I_unit * j_ * r_;
}

CliffordRep CliffordRep::defect_basis() {
  MatX j = MatX::Zero(4, 4);
  j.diagonal() << 1.0, -1.0, 1.0, -1.0;
  MatX r = MatX::Zero(4, 4);
  // R e++ = e+-, R e+- = e++, R e-- = e-+, R e-+ = e--
  r(1, 0) = r(0, 1) = 1.0;
  r(3, 2) = r(2, 3) = 1.0;
  return CliffordRep(std::move(j), std::move(r));
}

CliffordRep CliffordRep::pauli() {
  MatX j(2, 2), r(2, 2);
  j << 1.0, 0.0, 0.0, -1.0;
  r << 0.0, 1.0, 1.0, 0.0;
  return CliffordRep(std::move(j), std::move(r));
}

MatX CliffordRep::to_matrix(const CliffordCoeffs& k) const {
  return k.c0 * identity() + k.c1 * j_ + k.c2 * r_ + k.c3 * ijr_;
}

CliffordCoeffs CliffordRep::decompose(const MatX& m) const {
  // The four basis elements are Hermitian, unitary and Hilbert-Schmidt orthogonal.
  const double n = static_cast<double>(dim());
  return {m.trace() / n, (j_ * m).trace() / n, (r_ * m).trace() / n, (ijr_ * m).trace() / n};
}

MatX make_j_alpha(const CliffordRep& rep, const SphereVec& alpha) {
  return alpha.a1() * rep.j() + alpha.a2() * rep.r() + alpha.a3() * rep.ijr();
}

bool anticommutes(const CliffordRep& rep, const SphereVec& alpha, const SphereVec& beta) {
  const MatX a = make_j_alpha(rep, alpha);
  const MatX b = make_j_alpha(rep, beta);
  return max_abs(a * b + b * a) < 1e-10;
}

SumSymmetry sum_symmetry(const SphereVec& alpha, const SphereVec& beta) {
  if (distance(alpha, -beta) <= 1e-9) {
    throw Error(ErrorKind::AntipodalVectors, "alpha = -beta has no sum direction");
  }
  const double s0 = alpha[0] + beta[0], s1 = alpha[1] + beta[1], s2 = alpha[2] + beta[2];
  return {std::sqrt(s0 * s0 + s1 * s1 + s2 * s2), SphereVec::normalized(s0, s1, s2)};
}

std::optional<SphereVec> w_direction(const SphereVec& alpha, const SphereVec& beta) {
  if (distance(alpha, -beta) <= 1e-9) return std::nullopt;
  return sum_symmetry(alpha, beta).direction;
}

WSymmetry w_symmetry(const CliffordRep& rep, const SphereVec& alpha, const SphereVec& beta) {
  const auto dir = w_direction(alpha, beta);
  if (!dir) return {rep.identity(), true};
  return {make_j_alpha(rep, *dir), false};
}

SphereVec orthogonalize_beta(const SphereVec& alpha, const SphereVec& beta) {
  const auto x = cross(alpha, beta);
  if (std::hypot(x[0], x[1], x[2]) < 1e-10) {
    throw Error(ErrorKind::LinearlyDependent, "alpha and beta are parallel");
  }
  const double ab = dot(alpha, beta);
  if (std::abs(ab) < 1e-14) return beta;
  const double c = -1.0 / ab;
  return SphereVec::normalized(alpha[0] + c * beta[0], alpha[1] + c * beta[1], alpha[2] + c * beta[2]);
}

SphereVec gamma_symmetry(const SphereVec& alpha, const SphereVec& beta_prime) {
  if (std::abs(dot(alpha, beta_prime)) > 1e-10) {
    throw Error(ErrorKind::NotOrthogonal, "gamma_symmetry needs alpha . beta' = 0");
  }
  const auto g = cross(alpha, beta_prime);
  return SphereVec::normalized(g[0], g[1], g[2]);
}

}  // namespace krein
