#include "krein/boundary_triplet.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace krein {

namespace {

VecX random_vec(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  VecX v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = cplx(normal(rng), normal(rng));
  return v;
}

double half_green_residual(const HalfTriplet& half, const VecX& tf, const VecX& tg) {
  const cplx lhs = tg.dot(half.green_form * tf);
  const cplx g0f = half.gamma0 * tf, g1f = half.gamma1 * tf;
  const cplx g0g = half.gamma0 * tg, g1g = half.gamma1 * tg;
  const cplx rhs = std::conj(g0g) * g1f - std::conj(g1g) * g0f;
  return std::abs(lhs - rhs);
}

// +1 eigenvector of a 2x2 Hermitian involution, first nonzero entry real positive.
Vec2 plus_eigenvector(const Mat2& j) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(j);
  Vec2 v = es.eigenvectors().col(1);
  const Eigen::Index k = std::abs(v(0)) > 1e-8 ? 0 : 1;
  v *= std::conj(v(k)) / std::abs(v(k));
  return v;
}

Mat2 to_mat2(const MatX& m) { return Mat2(m); }

}  // namespace

Mat2 TripletModel::image_j_alpha(const SphereVec& alpha) const {
  return to_mat2(make_j_alpha(image_rep, alpha));
}

MatX TripletModel::trace_action(const SphereVec& alpha) const {
  const MatX j = make_j_alpha(component_rep, alpha);
  return Eigen::kroneckerProduct(j, MatX::Identity(slots, slots));
}

double TripletModel::green_residual(const VecX& tf, const VecX& tg) const {
  const cplx lhs = tg.dot(green_form * tf);
  const Vec2 g0f = gamma0 * tf, g1f = gamma1 * tf;
  const Vec2 g0g = gamma0 * tg, g1g = gamma1 * tg;
  return std::abs(lhs - (g0g.dot(g1f) - g1g.dot(g0f)));
}

TripletModel build_direct_sum_triplet(const HalfTriplet& half, const CliffordRep& component_rep,
                                      const SphereVec& tau, const SphereVec& gamma) {
  if (std::abs(dot(tau, gamma)) > 1e-10) {
    throw Error(ErrorKind::NotOrthogonal, "tau . gamma != 0");
  }
  if (component_rep.dim() != 2) {
    throw Error(ErrorKind::InvalidRepresentation, "component representation must be 2x2");
  }
  const Eigen::Index m = half.gamma0.size();
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 8; ++k) {
    const VecX tf = random_vec(rng, m), tg = random_vec(rng, m);
    if (half_green_residual(half, tf, tg) > 1e-8) {
      throw Error(ErrorKind::GreenIdentityViolated, "half triplet");
    }
  }

  const Mat2 j_tau = to_mat2(make_j_alpha(component_rep, tau));
  const Mat2 j_gamma = to_mat2(make_j_alpha(component_rep, gamma));
  const Vec2 vp = plus_eigenvector(j_gamma);
  Mat2 v;
  v.col(0) = vp;
  v.col(1) = j_tau * vp;

  const MatX vstar = v.adjoint();
  CliffordRep image(vstar * component_rep.j() * v, vstar * component_rep.r() * v);
  TripletModel t{component_rep,
                 std::move(image),
                 tau,
                 gamma,
                 m,
                 v,
                 Eigen::kroneckerProduct(vstar, MatX(half.gamma0)),
                 Eigen::kroneckerProduct(vstar, MatX(half.gamma1)),
                 Eigen::kroneckerProduct(MatX::Identity(2, 2), half.green_form)};
  for (int k = 0; k < 8; ++k) {
    const VecX tf = random_vec(rng, 2 * m), tg = random_vec(rng, 2 * m);
    if (t.green_residual(tf, tg) > 1e-8) {
      throw Error(ErrorKind::GreenIdentityViolated, "direct sum triplet");
    }
  }
  return t;
}

Mat2 weyl_matrix(const TripletModel& triplet, const MatX& defect_traces) {
  const Mat2 g0 = triplet.gamma0 * defect_traces;
  const Mat2 g1 = triplet.gamma1 * defect_traces;
  Eigen::JacobiSVD<Mat2> svd(g0);
  const auto s = svd.singularValues();
  if (s(0) == 0.0 || s(1) / s(0) < 1e-12) {
    throw Error(ErrorKind::SingularGamma0, "Gamma0 not injective on the defect space");
  }
  return g1 * g0.inverse();
}

ExtensionU::ExtensionU(const Mat2& u_, const SphereVec& alpha_) : u(u_), alpha(alpha_) {
  if (max_abs(u * u.adjoint() - Mat2::Identity()) > 1e-9) {
    throw Error(ErrorKind::NotUnitary, "U U* != I");
  }
}

double BoundaryPredicate::residual(const Vec2& b1, const Vec2& b0) const {
  return (k1 * b1 + k0 * b0).norm();
}

bool BoundaryPredicate::contains(const Vec2& b1, const Vec2& b0, double tol) const {
  return residual(b1, b0) <= tol;
}

Eigen::Matrix<cplx, 4, 2> BoundaryPredicate::basis() const {
  Eigen::Matrix<cplx, 2, 4> k;
  k << k1, k0;
  Eigen::JacobiSVD<Eigen::Matrix<cplx, 2, 4>> svd(k, Eigen::ComputeFullV);
  return svd.matrixV().rightCols<2>();
}

BoundaryPredicate extension_from_unitary(const CliffordRep& image_rep, const ExtensionU& ext) {
  const Mat2 j = to_mat2(make_j_alpha(image_rep, ext.alpha));
  const Mat2 id = Mat2::Identity();
  return {(ext.u - id) * j, I_unit * (ext.u + id)};
}

Mat2 recover_unitary(const CliffordRep& image_rep, const SphereVec& alpha,
                     const Eigen::Matrix<cplx, 4, 2>& data) {
  const Mat2 j = to_mat2(make_j_alpha(image_rep, alpha));
  const Mat2 b1 = data.topRows<2>(), b0 = data.bottomRows<2>();
  const Mat2 x = j * b1 + I_unit * b0;
  const Mat2 y = j * b1 - I_unit * b0;
  Eigen::JacobiSVD<Mat2> svd(x);
  const auto s = svd.singularValues();
  if (s(0) == 0.0 || s(1) / s(0) < 1e-12) {
    throw Error(ErrorKind::MalformedSubspace, "boundary data is not a graph over J b1 + i b0");
  }
  return y * x.inverse();
}

bool commutes_with(const CliffordRep& image_rep, const Mat2& u, const SphereVec& beta) {
  const Mat2 jb = to_mat2(make_j_alpha(image_rep, beta));
  return max_abs(jb * u - u.inverse() * jb) < 1e-10;
}

UnitaryClass classify_unitary(const CliffordRep& image_rep, const ExtensionU& ext, int grid) {
  UnitaryClass out;
  out.betas = orthogonal_circle(ext.alpha, grid);
  out.in_upsilon = !out.betas.empty();
  for (const auto& b : out.betas) {
    const bool c = commutes_with(image_rep, ext.u, b);
    out.commutes.push_back(c);
    out.in_upsilon = out.in_upsilon && c;
  }

  const CliffordCoeffs k = image_rep.decompose(ext.u);
  const double b1 = k.c1.real(), b2 = k.c2.real(), b3 = k.c3.real();
  const double norm = std::hypot(b1, b2, b3);
  const double along = b1 * ext.alpha[0] + b2 * ext.alpha[1] + b3 * ext.alpha[2];
  if (norm > 0.5 && std::abs(norm - 1.0) <= 1e-10 && std::abs(along) <= 1e-10) {
    const SphereVec beta = SphereVec::normalized(b1, b2, b3);
    if (max_abs(ext.u - make_j_alpha(image_rep, beta)) <= 1e-10) {
      out.empty_resolvent = true;
      out.witness_beta = beta;
    }
  }
  return out;
}

Mat2 cayley_T(const CliffordRep& image_rep, const ExtensionU& ext) {
  Eigen::ComplexEigenSolver<Mat2> es(ext.u);
  for (Eigen::Index i = 0; i < 2; ++i) {
    if (std::abs(es.eigenvalues()(i) - 1.0) < 1e-10) {
      throw Error(ErrorKind::NotDisjoint, "1 is an eigenvalue of U");
    }
  }
  const Mat2 id = Mat2::Identity();
  const Mat2 j = to_mat2(make_j_alpha(image_rep, ext.alpha));
  return I_unit * j * (id + ext.u) * (id - ext.u).inverse();
}

ExtensionU transport_unitary(const CliffordRep& image_rep, const ExtensionU& ext,
                             const SphereVec& beta) {
  const Mat2 w = to_mat2(w_symmetry(image_rep, ext.alpha, beta).matrix);
  return ExtensionU(w * ext.u * w, beta);
}

}  // namespace krein
