#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace krein {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

inline constexpr cplx I_unit{0.0, 1.0};

enum class ErrorKind {
  NonUnitVector,
  AntipodalVectors,
  LinearlyDependent,
  NotOrthogonal,
  InvalidRepresentation,
  MalformedSubspace,
  GreenIdentityViolated,
  SingularGamma0,
  NotUnitary,
  NotDisjoint,
  NotInResolventSet,
  RealMu,
  OddPotential,
  BadGrid,
  PredicateDegenerate,
  EigensolverFailure,
  Config,
};

const char* to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` is the
/// machine-readable cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace krein
