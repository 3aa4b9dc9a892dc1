#include "krein/defect_space.hpp"

#include <cmath>
#include <numbers>

namespace krein {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

}  // namespace

DefectModel DefectModel::standard() {
  MatX z = MatX::Zero(4, 4);
  z.diagonal() << 1.0, 1.0, -1.0, -1.0;
  return {CliffordRep::defect_basis(), std::move(z)};
}

MatX DefectModel::j_beta_z(const SphereVec& beta) const { return make_j_alpha(rep, beta) * z; }

ExtensionSubspace::ExtensionSubspace(Vec4 d1, Vec4 d2) : d1_(std::move(d1)), d2_(std::move(d2)) {
  if (!(gram_determinant() > 1e-12)) {
    throw Error(ErrorKind::MalformedSubspace, "spanning vectors are linearly dependent");
  }
}

double ExtensionSubspace::gram_determinant() const {
  return d1_.squaredNorm() * d2_.squaredNorm() - std::norm(d1_.dot(d2_));
}

ExtensionSubspace EmptyResolventFamily::subspace() const {
  Vec4 d1 = Vec4::Zero(), d2 = Vec4::Zero();
  d1(0) = 1.0;
  d1(1) = std::polar(1.0, phi + gamma);
  d2(3) = 1.0;
  d2(2) = std::polar(1.0, phi - gamma);
  return {d1, d2};
}

cplx indefinite_metric(const DefectModel& model, const SphereVec& beta, const Vec4& x, const Vec4& y) {
  // Eigen's dot conjugates its left argument: y.dot(v) = y^* v = (v, y).
  const VecX gx = model.j_beta_z(beta) * x;
  return y.dot(gx);
}

double neutrality_residual(const DefectModel& model, const SphereVec& beta, const ExtensionSubspace& m) {
  const MatX g = model.j_beta_z(beta);
  Eigen::Matrix<cplx, 4, 2> d;
  d << m.d1(), m.d2();
  return max_abs(d.adjoint() * g * d);
}

bool is_neutral(const DefectModel& model, const SphereVec& beta, const ExtensionSubspace& m) {
  return neutrality_residual(model, beta, m) < 1e-10;
}

std::pair<double, double> solve_neutrality_single(double gamma) {
  return {std::sin(gamma), std::cos(gamma)};
}

std::optional<std::pair<double, double>> solve_neutrality_system(double phi, double gamma) {
  // Rows: (cos(phi+g), -sin(phi+g)) and (cos(phi-g), sin(phi-g)); det = sin 2 phi.
  if (std::abs(std::sin(2.0 * phi)) > 1e-10) return std::nullopt;
  // Both rows are unit length; the null vector of the first one spans the kernel.
  return std::pair{std::sin(phi + gamma), std::cos(phi + gamma)};
}

const char* to_string(EmptyResolventClass::Kind kind) {
  switch (kind) {
    case EmptyResolventClass::Kind::InXiPair: return "in_Xi_pair";
    case EmptyResolventClass::Kind::InXiOnly: return "in_Xi_only";
    case EmptyResolventClass::Kind::NotEmptyResolvent: return "not_empty_resolvent";
  }
  return "unknown";
}

EmptyResolventClass classify_empty_resolvent(const DefectModel& model, const ExtensionSubspace& m,
                                             bool weyl_constant) {
  const SphereVec alpha(1.0, 0.0, 0.0);
  if (!is_neutral(model, alpha, m)) {
    throw Error(ErrorKind::MalformedSubspace, "subspace is not neutral for [.,.]_{JZ}");
  }

  // Column echelon on the e++ / e-- coordinates.
  Eigen::Matrix<cplx, 4, 2> d;
  d << m.d1(), m.d2();
  Mat2 pivots;
  pivots << d(0, 0), d(0, 1), d(3, 0), d(3, 1);
  EmptyResolventClass out;
  if (std::abs(pivots.determinant()) < 1e-10) return out;
  const Eigen::Matrix<cplx, 4, 2> n = d * pivots.inverse();

  const cplx a = n(1, 0), b = n(2, 1);
  const bool d_form = std::abs(n(2, 0)) < 1e-10 && std::abs(n(1, 1)) < 1e-10 &&
                      std::abs(std::abs(a) - 1.0) < 1e-10 && std::abs(std::abs(b) - 1.0) < 1e-10;
  if (!d_form) return out;

  const double s = std::arg(a), t = std::arg(b);
  const EmptyResolventFamily fam{wrap_angle(0.5 * (s + t)), wrap_angle(0.5 * (s - t))};
  out.family = fam;

  if (!weyl_constant) {
    // Only the phi = 0 slice (b = conj(a)) has empty resolvent set.
    if (std::abs(a * b - 1.0) >= 1e-10) return out;
    const auto [b2, b3] = solve_neutrality_single(s);
    out.kind = EmptyResolventClass::Kind::InXiPair;
    out.witness_beta = SphereVec::normalized(0.0, b2, b3);
    out.family = EmptyResolventFamily{0.0, wrap_angle(s)};
    return out;
  }

  const auto sol = solve_neutrality_system(fam.phi, fam.gamma);
  if (!sol) {
    out.kind = EmptyResolventClass::Kind::InXiOnly;
    return out;
  }
  out.kind = EmptyResolventClass::Kind::InXiPair;
  out.witness_beta = SphereVec::normalized(0.0, sol->first, sol->second);
  return out;
}

}  // namespace krein
