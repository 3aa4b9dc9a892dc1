#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "krein/boundary_triplet.hpp"
#include "krein/models.hpp"
#include "krein/types.hpp"

namespace krein {

struct SpectrumReport {
  std::vector<cplx> eigenvalues;  // sorted by (real, imag)
  double pairing_residual = 0.0;
  double max_imag = 0.0;
  bool hermitian = false;  // solved with the self-adjoint eigensolver
  std::vector<std::pair<std::string, double>> parameters;
};

/// Dense eigenvalues of D. A Hermitian D (to 1e-13 relative) goes through the
/// self-adjoint solver. Throws EigensolverFailure.
SpectrumReport compute_spectrum(const MatX& d, bool parallel = true);

struct EquivalenceReport {
  double matched_distance = 0.0;
  bool passed = false;  // distance < 1e-8
};

/// Compares spec(D) with spec(W D W) as multisets.
EquivalenceReport verify_unitary_equivalence(const MatX& d, const MatX& w, bool parallel = true);

/// One-parameter family of extension unitaries.
struct UnitaryFamily {
  std::string name;
  std::function<Mat2(double)> at;
};

/// "theta": cos t sigma3 + sin t sigma2, the J_beta with beta orthogonal to the
/// parity direction. "phase": e^{it} I. "identity": I for every t.
/// Throws Error(Config) for unknown names.
UnitaryFamily named_family(const std::string& name);

/// One report per parameter, in grid order. Failures propagate from the lowest
/// failing index.
std::vector<SpectrumReport> sweep(const UnitaryFamily& family, const SphereVec& alpha,
                                  const SchrodingerModel& model, const std::vector<double>& grid,
                                  bool parallel = true);

}  // namespace krein
