#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "krein/boundary_triplet.hpp"
#include "krein/defect_space.hpp"
#include "krein/types.hpp"

namespace krein {

// ---------------------------------------------------------------------------
// Shift model: S' = i d/dx on L2(R, C^2), Cl2 acting on the components.

struct ShiftModel {
  /// Throws BadGrid unless length >= 30 and points >= 2.
  ShiftModel(double length = 40.0, int points = 2001);

  double length;
  int points;

  /// Nonnegative distances 0 = x_0 < ... < x_{n-1} = length shared by both halves.
  std::vector<double> grid() const;
  double step() const { return length / (points - 1); }
};

/// Grid function on (-L, 0) u (0, L); left[k] is the value at -xs[k].
struct ShiftFunction {
  std::vector<double> xs;
  std::vector<Vec2> left;
  std::vector<Vec2> right;

  /// Component-major (u0(0-), u0(0+), u1(0-), u1(0+)).
  Vec4 trace() const;
  ShiftFunction operator+(const ShiftFunction& other) const;
  ShiftFunction operator-(const ShiftFunction& other) const;
  /// Discrete l2 norm of all samples.
  double norm() const;
};

/// L2-normalized e^{-i mu x} e_k on the decaying half-line, k = 0, 1. Throws RealMu.
std::array<ShiftFunction, 2> shift_defect_vectors(const ShiftModel& model, cplx mu);

/// Closed-form traces of the defect vectors, columns k = 0, 1. Throws RealMu.
Eigen::Matrix<cplx, 4, 2> shift_defect_traces(cplx mu);

/// Gamma0 = (u(0-) + u(0+))/sqrt2, Gamma1 = i(u(0-) - u(0+))/sqrt2.
HalfTriplet shift_half_triplet();

/// tau = (0,1,0), gamma = (0,0,1), J = sigma3, R = sigma1 on components.
TripletModel shift_boundary_triplet(const ShiftModel& model);

Mat2 shift_weyl(const TripletModel& triplet, cplx mu);

struct ShiftSource {
  std::function<Vec2(double)> g;
  double support = 12.0;
};

/// Krein formula pieces for the shift model with right-hand side g.
/// `parallel` selects the OpenMP sampling kernel.
ResolventIngredients<ShiftFunction> shift_resolvent_ingredients(const ShiftModel& model,
                                                                const TripletModel& triplet,
                                                                const ShiftSource& source,
                                                                bool parallel = true);

/// (A - mu)^{-1} g solved directly: particular solution plus the free-side
/// homogeneous term fixed by the boundary predicate of ext.
ShiftFunction shift_resolvent_direct(const ShiftModel& model, const TripletModel& triplet,
                                     const ExtensionU& ext, cplx mu, const ShiftSource& source,
                                     bool parallel = true);

/// Coordinates in (e++, e+-, e-+, e--) of the defect-space subspace whose
/// boundary data (rows b1; b0) are the columns of `data`. e+- = R e++ and
/// e++ = gamma(i) u with u the +1 eigenvector of the image J.
ExtensionSubspace shift_defect_subspace(const TripletModel& triplet,
                                        const Eigen::Matrix<cplx, 4, 2>& data);

/// Gaussian bump amp * exp(-(x - center)^2 / (2 width^2)).
ShiftSource gaussian_source(const Vec2& amp, double center, double width);

// ---------------------------------------------------------------------------
// Schroedinger model: -phi'' + q phi on (eps, X) u (-X, -eps).

struct Potential {
  enum class Kind { Zero, InverseAbs, InverseSquare, Harmonic, Linear };
  Kind kind = Kind::Zero;
  double c = 1.0;

  double operator()(double x) const;
  /// Throws Error(Config) for an unknown name.
  static Potential from_name(const std::string& name, double c);
  std::string name() const;
};

/// Staggered grid x_k = eps + (k + 1/2) h, k < n, Dirichlet at eps + (n + 1/2) h.
/// Unknowns are ordered [right half x_k, left half -x_k]. The ghost values at
/// +-(eps - h/2) carry the boundary data b0 = (ghost + phi_0)/2, b1 = (phi_0 - ghost)/h,
/// derivatives taken away from the origin.
struct SchrodingerModel {
  Potential q;
  double eps;
  double x_max;
  double h;
  int n;
  std::vector<double> nodes;
  MatX bulk;  // ghost values set to zero

  Eigen::Index size() const { return 2 * n; }
  /// Image symmetry acting on the grid: K tensor I_n.
  MatX lift(const Mat2& k) const;
  MatX parity() const;
  MatX sign() const;
};

/// Schroedinger boundary image algebra: J = parity (sigma1), R = sgn x (sigma3).
CliffordRep schrodinger_image_rep();

/// Throws BadGrid (eps <= 0, h >= eps/4, x_max <= eps + h), OddPotential.
SchrodingerModel schrodinger_assemble(const Potential& q, double eps, double x_max, double h);

/// Bulk operator with the ghost values eliminated through the boundary predicate
/// of ext relative to the Schroedinger image algebra. Throws PredicateDegenerate.
MatX schrodinger_apply_extension(const SchrodingerModel& model, const ExtensionU& ext);

}  // namespace krein
