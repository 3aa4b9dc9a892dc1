#pragma once

// Four-dimensional defect-space model M = N_i + N_{-i} for deficiency indices
// <2,2>, with basis (e++, e+-, e-+, e--) mapped to the standard basis of C^4.

#include <optional>
#include <utility>

#include "krein/clifford.hpp"

namespace krein {

struct DefectModel {
  CliffordRep rep;  // J, R restricted to M
  MatX z;           // +I on N_i, -I on N_{-i}

  static DefectModel standard();

  /// J_beta Z, the Gram operator of [.,.]_{J_beta Z}.
  MatX j_beta_z(const SphereVec& beta) const;
};

/// Two vectors spanning M, a 2-dimensional subspace of the defect space.
class ExtensionSubspace {
 public:
  /// Throws MalformedSubspace when the Gram determinant is <= 1e-12.
  ExtensionSubspace(Vec4 d1, Vec4 d2);

  const Vec4& d1() const { return d1_; }
  const Vec4& d2() const { return d2_; }
  double gram_determinant() const;

 private:
  Vec4 d1_, d2_;
};

/// d1 = e++ + e^{i(phi+gamma)} e+-,  d2 = e-- + e^{i(phi-gamma)} e-+.
struct EmptyResolventFamily {
  double phi = 0.0;
  double gamma = 0.0;

  ExtensionSubspace subspace() const;
};

/// [x, y]_{J_beta Z} = (J_beta Z x, y).
cplx indefinite_metric(const DefectModel& model, const SphereVec& beta, const Vec4& x, const Vec4& y);

/// Neutral w.r.t. [.,.]_{J_beta Z}; with dim M = 2 this is hypermaximal neutrality.
bool is_neutral(const DefectModel& model, const SphereVec& beta, const ExtensionSubspace& m);

/// Largest |[d_i, d_j]_{J_beta Z}|.
double neutrality_residual(const DefectModel& model, const SphereVec& beta, const ExtensionSubspace& m);

/// Normalized nontrivial solution (beta2, beta3) = (sin g, cos g) of
/// cos(g) beta2 - sin(g) beta3 = 0.
std::pair<double, double> solve_neutrality_single(double gamma);

/// The 2x2 homogeneous system of the two-parameter family. Empty when only the
/// trivial solution exists (|sin 2 phi| > 1e-10).
std::optional<std::pair<double, double>> solve_neutrality_system(double phi, double gamma);

struct EmptyResolventClass {
  enum class Kind { InXiPair, InXiOnly, NotEmptyResolvent };
  Kind kind = Kind::NotEmptyResolvent;
  std::optional<SphereVec> witness_beta;
  std::optional<EmptyResolventFamily> family;  // recovered normal form, if any
};

const char* to_string(EmptyResolventClass::Kind kind);

/// Classification relative to alpha = (1,0,0). Throws MalformedSubspace when M
/// is not neutral for [.,.]_{JZ}.
EmptyResolventClass classify_empty_resolvent(const DefectModel& model, const ExtensionSubspace& m,
                                             bool weyl_constant);

}  // namespace krein
