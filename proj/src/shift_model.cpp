#include <cmath>

#include <Eigen/Eigenvalues>

#include "krein/kernels.hpp"
#include "krein/models.hpp"
#include "krein/quadrature.hpp"

namespace krein {

namespace {

// Trace slot of the half-line where e^{-i mu x} decays: 0 for 0-, 1 for 0+.
int free_slot(cplx mu) { return mu.imag() > 0.0 ? 0 : 1; }

void require_nonreal(cplx mu) {
  if (mu.imag() == 0.0) throw Error(ErrorKind::RealMu, "Im mu = 0");
}

Eigen::Matrix<cplx, 4, 2> free_embedding(cplx mu) {
  Eigen::Matrix<cplx, 4, 2> e = Eigen::Matrix<cplx, 4, 2>::Zero();
  const int s = free_slot(mu);
  e(s, 0) = 1.0;
  e(2 + s, 1) = 1.0;
  return e;
}

ShiftFunction zero_function(const ShiftModel& model) {
  ShiftFunction f;
  f.xs = model.grid();
  f.left.assign(f.xs.size(), Vec2::Zero());
  f.right.assign(f.xs.size(), Vec2::Zero());
  return f;
}

// Adds e^{-i mu x} c on the free half-line.
void add_homogeneous(ShiftFunction& f, cplx mu, const Vec2& c) {
  const bool left = free_slot(mu) == 0;
  for (std::size_t i = 0; i < f.xs.size(); ++i) {
    const double x = left ? -f.xs[i] : f.xs[i];
    (left ? f.left[i] : f.right[i]) += std::exp(-I_unit * mu * x) * c;
  }
}

ShiftFunction sample_particular(const ShiftModel& model, cplx mu, const ShiftSource& source,
                                bool parallel) {
  ShiftFunction f = zero_function(model);
  kernels::ParticularProblem p{mu, source.g, source.support};
  std::vector<double> neg(f.xs.size());
  for (std::size_t i = 0; i < f.xs.size(); ++i) neg[i] = -f.xs[i];
  if (parallel) {
    kernels::omp::sample_particular(p, neg, kernels::Side::Left, f.left);
    kernels::omp::sample_particular(p, f.xs, kernels::Side::Right, f.right);
  } else {
    kernels::serial::sample_particular(p, neg, kernels::Side::Left, f.left);
    kernels::serial::sample_particular(p, f.xs, kernels::Side::Right, f.right);
  }
  return f;
}

}  // namespace

ShiftModel::ShiftModel(double length_, int points_) : length(length_), points(points_) {
  if (!(length >= 30.0) || points < 2) {
    throw Error(ErrorKind::BadGrid, "shift model needs length >= 30 and at least 2 points");
  }
}

std::vector<double> ShiftModel::grid() const {
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) xs[i] = length * i / (points - 1);
  return xs;
}

Vec4 ShiftFunction::trace() const {
  return Vec4(left[0](0), right[0](0), left[0](1), right[0](1));
}

ShiftFunction ShiftFunction::operator+(const ShiftFunction& other) const {
  ShiftFunction out = *this;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.left[i] += other.left[i];
    out.right[i] += other.right[i];
  }
  return out;
}

ShiftFunction ShiftFunction::operator-(const ShiftFunction& other) const {
  ShiftFunction out = *this;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.left[i] -= other.left[i];
    out.right[i] -= other.right[i];
  }
  return out;
}

double ShiftFunction::norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) s += left[i].squaredNorm() + right[i].squaredNorm();
  return std::sqrt(s);
}

Eigen::Matrix<cplx, 4, 2> shift_defect_traces(cplx mu) {
  require_nonreal(mu);
  return std::sqrt(2.0 * std::abs(mu.imag())) * free_embedding(mu);
}

std::array<ShiftFunction, 2> shift_defect_vectors(const ShiftModel& model, cplx mu) {
  require_nonreal(mu);
  const double scale = std::sqrt(2.0 * std::abs(mu.imag()));
  std::array<ShiftFunction, 2> out{zero_function(model), zero_function(model)};
  add_homogeneous(out[0], mu, Vec2(scale, 0.0));
  add_homogeneous(out[1], mu, Vec2(0.0, scale));
  return out;
}

HalfTriplet shift_half_triplet() {
  const double r = 1.0 / std::sqrt(2.0);
  HalfTriplet h;
  h.gamma0 = Eigen::RowVector2cd(r, r);
  h.gamma1 = Eigen::RowVector2cd(I_unit * r, -I_unit * r);
  h.green_form = MatX::Zero(2, 2);
  h.green_form(0, 0) = I_unit;
  h.green_form(1, 1) = -I_unit;
  return h;
}

TripletModel shift_boundary_triplet(const ShiftModel&) {
  return build_direct_sum_triplet(shift_half_triplet(), CliffordRep::pauli(), SphereVec(0, 1, 0),
                                  SphereVec(0, 0, 1));
}

Mat2 shift_weyl(const TripletModel& triplet, cplx mu) {
  return weyl_matrix(triplet, shift_defect_traces(mu));
}

ExtensionSubspace shift_defect_subspace(const TripletModel& triplet,
                                        const Eigen::Matrix<cplx, 4, 2>& data) {
  // b0 = h+ + h-, b1 = M(i) h+ + M(-i) h-, with h+- = Gamma0 of the N_{+-i} parts.
  Mat4 a;
  a << Mat2::Identity(), Mat2::Identity(), shift_weyl(triplet, I_unit), shift_weyl(triplet, -I_unit);
  Eigen::Matrix<cplx, 4, 2> rhs;
  rhs << data.bottomRows<2>(), data.topRows<2>();
  const Eigen::Matrix<cplx, 4, 2> hs = a.partialPivLu().solve(rhs);

  Eigen::SelfAdjointEigenSolver<Mat2> es(Mat2(triplet.image_rep.j()));
  Mat2 basis;
  basis.col(0) = es.eigenvectors().col(1);
  basis.col(1) = Mat2(triplet.image_rep.r()) * basis.col(0);
  const Mat2 inv = basis.adjoint();
  Vec4 d[2];
  for (int k = 0; k < 2; ++k) {
    d[k] << inv * hs.col(k).head<2>(), inv * hs.col(k).tail<2>();
  }
  return ExtensionSubspace(d[0], d[1]);
}

ShiftSource gaussian_source(const Vec2& amp, double center, double width) {
  ShiftSource s;
  s.g = [amp, center, width](double x) -> Vec2 {
    const double z = (x - center) / width;
    return std::exp(-0.5 * z * z) * amp;
  };
  s.support = std::abs(center) + 12.0 * width;
  return s;
}

ShiftFunction shift_resolvent_direct(const ShiftModel& model, const TripletModel& triplet,
                                     const ExtensionU& ext, cplx mu, const ShiftSource& source,
                                     bool parallel) {
  require_nonreal(mu);
  ShiftFunction f = sample_particular(model, mu, source, parallel);
  const BoundaryPredicate pred = extension_from_unitary(triplet.image_rep, ext);
  // K t = 0 on the full trace, K = K1 Gamma1 + K0 Gamma0.
  const Eigen::Matrix<cplx, 2, 4> k = pred.k1 * triplet.gamma1 + pred.k0 * triplet.gamma0;
  const Mat2 kf = k * free_embedding(mu);
  Eigen::JacobiSVD<Mat2> svd(kf);
  const auto s = svd.singularValues();
  if (s(0) == 0.0 || s(1) / s(0) < 1e-12) {
    throw Error(ErrorKind::NotInResolventSet, "boundary condition does not fix the homogeneous part");
  }
  add_homogeneous(f, mu, -kf.inverse() * (k * f.trace()));
  return f;
}

ResolventIngredients<ShiftFunction> shift_resolvent_ingredients(const ShiftModel& model,
                                                                const TripletModel& triplet,
                                                                const ShiftSource& source,
                                                                bool parallel) {
  // Gamma0 restricted to the free-side trace slots.
  auto gamma0_free = [triplet](cplx mu) -> Mat2 { return triplet.gamma0 * free_embedding(mu); };

  ResolventIngredients<ShiftFunction> in;
  in.a0_resolvent = [=](cplx mu) {
    require_nonreal(mu);
    ShiftFunction f = sample_particular(model, mu, source, parallel);
    const Vec2 c = -gamma0_free(mu).partialPivLu().solve(triplet.gamma0 * f.trace());
    add_homogeneous(f, mu, c);
    return f;
  };
  in.gamma_field = [=](cplx mu, const Vec2& h) {
    require_nonreal(mu);
    ShiftFunction f = zero_function(model);
    add_homogeneous(f, mu, gamma0_free(mu).partialPivLu().solve(h));
    return f;
  };
  in.gamma_adjoint = [=](cplx mu) -> Vec2 {
    require_nonreal(mu);
    const cplx nu = std::conj(mu);
    const Mat2 coeff = gamma0_free(nu).inverse();
    const bool left = free_slot(nu) == 0;
    const double a = left ? -source.support : 0.0;
    const double b = left ? 0.0 : source.support;
    // (g, gamma(nu) e_k) = int conj(e^{-i nu x}) coeff_k^* g(x) dx
    auto integrand = [&](double x) -> Vec2 {
      return std::conj(std::exp(-I_unit * nu * x)) * (coeff.adjoint() * source.g(x));
    };
    return quad::integrate(integrand, a, b, 0.05, Vec2(Vec2::Zero()));
  };
  in.weyl = [triplet](cplx mu) { return shift_weyl(triplet, mu); };
  return in;
}

}  // namespace krein
