#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "krein/clifford.hpp"
#include "krein/types.hpp"

namespace krein {

/// Boundary maps of the half operator S+ acting on an m-slot trace vector t.
/// `green_form` Q encodes (S*f, g) - (f, S*g) = t_g^* Q t_f.
struct HalfTriplet {
  Eigen::RowVectorXcd gamma0;
  Eigen::RowVectorXcd gamma1;
  MatX green_form;
};

/// Full boundary triplet on H = C^2 for a model whose elements carry a trace
/// vector ordered component-major: index = component * slots + slot.
struct TripletModel {
  CliffordRep component_rep;
  CliffordRep image_rep;
  SphereVec tau;
  SphereVec gamma;
  Eigen::Index slots = 0;
  Mat2 v;       // columns v+, J_tau v+
  MatX gamma0;  // 2 x (2 * slots)
  MatX gamma1;
  MatX green_form;

  Mat2 image_j_alpha(const SphereVec& alpha) const;
  /// J_alpha acting on trace vectors.
  MatX trace_action(const SphereVec& alpha) const;
  /// |t_g^* Q t_f - ((G1 f, G0 g) - (G0 f, G1 g))|
  double green_residual(const VecX& tf, const VecX& tg) const;
};

/// Gamma_j f = (Gamma_j^+ f_+, Gamma_j^+ J_tau f_-), f_+- in the J_gamma eigenspaces.
/// Throws NotOrthogonal, GreenIdentityViolated.
TripletModel build_direct_sum_triplet(const HalfTriplet& half, const CliffordRep& component_rep,
                                      const SphereVec& tau, const SphereVec& gamma);

/// M with M Gamma0 f = Gamma1 f on the columns of `defect_traces`. Throws SingularGamma0.
Mat2 weyl_matrix(const TripletModel& triplet, const MatX& defect_traces);

struct ExtensionU {
  /// Throws NotUnitary when |U U^* - I| > 1e-9.
  ExtensionU(const Mat2& u, const SphereVec& alpha);

  Mat2 u;
  SphereVec alpha;
};

/// K1 b1 + K0 b0 = 0, the boundary condition U(J b1 + i b0) = J b1 - i b0.
struct BoundaryPredicate {
  Mat2 k1;
  Mat2 k0;

  double residual(const Vec2& b1, const Vec2& b0) const;
  bool contains(const Vec2& b1, const Vec2& b0, double tol = 1e-10) const;
  /// 4 x 2 orthonormal basis of the solution set, rows (b1; b0).
  Eigen::Matrix<cplx, 4, 2> basis() const;
};

BoundaryPredicate extension_from_unitary(const CliffordRep& image_rep, const ExtensionU& ext);

/// Inverse of extension_from_unitary on a 4 x 2 basis of boundary data.
Mat2 recover_unitary(const CliffordRep& image_rep, const SphereVec& alpha,
                     const Eigen::Matrix<cplx, 4, 2>& data);

struct UnitaryClass {
  std::vector<SphereVec> betas;
  std::vector<bool> commutes;
  bool in_upsilon = false;
  bool empty_resolvent = false;
  std::optional<SphereVec> witness_beta;
};

/// Checks J_beta U = U^{-1} J_beta over `grid` points of the circle orthogonal
/// to alpha, and whether U is itself such a J_beta.
UnitaryClass classify_unitary(const CliffordRep& image_rep, const ExtensionU& ext, int grid = 64);

bool commutes_with(const CliffordRep& image_rep, const Mat2& u, const SphereVec& beta);

/// T = i J_alpha (I + U)(I - U)^{-1}. Throws NotDisjoint when 1 is in spec(U).
Mat2 cayley_T(const CliffordRep& image_rep, const ExtensionU& ext);

/// U' = W U W with W = W_{alpha,beta}; the extension parameter relative to J_beta.
ExtensionU transport_unitary(const CliffordRep& image_rep, const ExtensionU& ext,
                             const SphereVec& beta);

/// Model-specific pieces of the Krein formula for a fixed right-hand side g.
template <typename Fn>
struct ResolventIngredients {
  std::function<Fn(cplx)> a0_resolvent;                 // (A0 - mu)^{-1} g
  std::function<Fn(cplx, const Vec2&)> gamma_field;     // gamma(mu) h
  std::function<Vec2(cplx)> gamma_adjoint;              // gamma(conj mu)^* g
  std::function<Mat2(cplx)> weyl;                       // M(mu)
};

/// (A - mu)^{-1} g = (A0 - mu)^{-1} g - gamma(mu) [M(mu) - T]^{-1} gamma(conj mu)^* g.
/// Throws NotInResolventSet, NotDisjoint.
template <typename Fn>
Fn krein_resolvent(const CliffordRep& image_rep, const ExtensionU& ext, cplx mu,
                   const ResolventIngredients<Fn>& in) {
  if (mu.imag() == 0.0) throw Error(ErrorKind::NotInResolventSet, "real mu");
  const Mat2 t = cayley_T(image_rep, ext);
  const Mat2 bracket = in.weyl(mu) - t;
  if (std::abs(bracket.determinant()) <= 1e-12) {
    throw Error(ErrorKind::NotInResolventSet, "det(M(mu) - T) vanishes");
  }
  const Vec2 h = bracket.partialPivLu().solve(in.gamma_adjoint(mu));
  return in.a0_resolvent(mu) + in.gamma_field(mu, -h);
}

}  // namespace krein
