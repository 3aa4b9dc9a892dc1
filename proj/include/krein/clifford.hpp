#pragma once

// Complex Clifford algebra Cl2(J,R) = span{I, J, R, iJR} and its
// sphere-indexed fundamental symmetries J_alpha = a1 J + a2 R + a3 iJR.

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "krein/types.hpp"

namespace krein {

/// Unit vector of R^3 indexing a fundamental symmetry.
class SphereVec {
 public:
  static constexpr double kNormTolerance = 1e-9;

  /// Throws NonUnitVector when |norm - 1| exceeds kNormTolerance.
  SphereVec(double a1, double a2, double a3);

  /// Rescales an arbitrary non-zero vector onto the sphere.
  static SphereVec normalized(double a1, double a2, double a3);

  double operator[](std::size_t i) const { return v_[i]; }
  double a1() const { return v_[0]; }
  double a2() const { return v_[1]; }
  double a3() const { return v_[2]; }
  const std::array<double, 3>& data() const { return v_; }

  SphereVec operator-() const;

 private:
  struct Unchecked {};
  SphereVec(Unchecked, double a1, double a2, double a3) : v_{a1, a2, a3} {}
  std::array<double, 3> v_;
};

double dot(const SphereVec& a, const SphereVec& b);
std::array<double, 3> cross(const SphereVec& a, const SphereVec& b);
double distance(const SphereVec& a, const SphereVec& b);

/// Gaussian 3-vector, normalized.
SphereVec random_sphere(std::mt19937_64& rng);

/// `count` equally spaced unit vectors on the great circle orthogonal to alpha.
std::vector<SphereVec> orthogonal_circle(const SphereVec& alpha, int count);

/// Coefficients of K = c0 I + c1 J + c2 R + c3 iJR.
struct CliffordCoeffs {
  cplx c0{}, c1{}, c2{}, c3{};
};

/// Concrete matrix representation of {I, J, R, iJR}.
class CliffordRep {
 public:
  /// Validates that J, R are non-trivial anti-commuting Hermitian involutions.
  CliffordRep(MatX j, MatX r);

  /// 4x4 defect-space representation on the basis (e++, e+-, e-+, e--).
  static CliffordRep defect_basis();
  /// 2x2 representation J = sigma3, R = sigma1.
  static CliffordRep pauli();

  Eigen::Index dim() const { return j_.rows(); }
  MatX identity() const { return MatX::Identity(dim(), dim()); }
  const MatX& j() const { return j_; }
  const MatX& r() const { return r_; }
  const MatX& ijr() const { return ijr_; }

  MatX to_matrix(const CliffordCoeffs& k) const;
  /// Inverse of to_matrix on the algebra (Hilbert-Schmidt projection).
  CliffordCoeffs decompose(const MatX& m) const;

 private:
  MatX j_, r_, ijr_;
};

/// Returns a1 J + a2 R + a3 iJR.
MatX make_j_alpha(const CliffordRep& rep, const SphereVec& alpha);

/// True iff J_alpha J_beta + J_beta J_alpha vanishes (max-abs < 1e-10).
bool anticommutes(const CliffordRep& rep, const SphereVec& alpha, const SphereVec& beta);

struct SumSymmetry {
  double scale;
  SphereVec direction;
};

/// J_alpha + J_beta = scale * J_direction. Throws AntipodalVectors for alpha = -beta.
SumSymmetry sum_symmetry(const SphereVec& alpha, const SphereVec& beta);

struct WSymmetry {
  MatX matrix;
  bool identity;  // antipodal case
};

/// W_{alpha,beta}: J_{(alpha+beta)/|alpha+beta|}, or I when alpha = -beta.
WSymmetry w_symmetry(const CliffordRep& rep, const SphereVec& alpha, const SphereVec& beta);

/// Direction of W_{alpha,beta}; empty for the antipodal case.
std::optional<SphereVec> w_direction(const SphereVec& alpha, const SphereVec& beta);

/// beta' = (alpha + c beta)/|alpha + c beta|, c = -1/(alpha.beta); beta when
/// already orthogonal. Throws LinearlyDependent.
SphereVec orthogonalize_beta(const SphereVec& alpha, const SphereVec& beta);

/// gamma = alpha x beta', so that i J_alpha J_beta' = J_gamma. Throws NotOrthogonal.
SphereVec gamma_symmetry(const SphereVec& alpha, const SphereVec& beta_prime);

// Small matrix predicates shared by the other modules.
double max_abs(const MatX& m);
bool is_hermitian_involution(const MatX& m, double tol);
bool is_unitary(const MatX& m, double tol);

}  // namespace krein
