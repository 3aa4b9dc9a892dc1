#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "krein/models.hpp"

namespace krein {

double Potential::operator()(double x) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::InverseAbs:
      return c / std::abs(x);
    case Kind::InverseSquare:
      return c / (x * x);
    case Kind::Harmonic:
      return c * x * x;
    case Kind::Linear:
      return c * x;
  }
  return 0.0;
}

Potential Potential::from_name(const std::string& name, double c) {
  if (name == "zero") return {Kind::Zero, c};
  if (name == "inverse_abs") return {Kind::InverseAbs, c};
  if (name == "inverse_square") return {Kind::InverseSquare, c};
  if (name == "harmonic") return {Kind::Harmonic, c};
  if (name == "linear") return {Kind::Linear, c};
  throw Error(ErrorKind::Config, "unknown potential kind '" + name + "'");
}

std::string Potential::name() const {
  switch (kind) {
    case Kind::Zero:
      return "zero";
    case Kind::InverseAbs:
      return "inverse_abs";
    case Kind::InverseSquare:
      return "inverse_square";
    case Kind::Harmonic:
      return "harmonic";
    case Kind::Linear:
      return "linear";
  }
  return "zero";
}

MatX SchrodingerModel::lift(const Mat2& k) const {
  return Eigen::kroneckerProduct(MatX(k), MatX::Identity(n, n));
}

MatX SchrodingerModel::parity() const {
  Mat2 p;
  p << 0.0, 1.0, 1.0, 0.0;
  return lift(p);
}

MatX SchrodingerModel::sign() const {
  Mat2 s;
  s << 1.0, 0.0, 0.0, -1.0;
  return lift(s);
}

CliffordRep schrodinger_image_rep() {
  MatX j(2, 2), r(2, 2);
  j << 0.0, 1.0, 1.0, 0.0;
  r << 1.0, 0.0, 0.0, -1.0;
  return CliffordRep(std::move(j), std::move(r));
}

SchrodingerModel schrodinger_assemble(const Potential& q, double eps, double x_max, double h) {
  if (!(eps > 0.0) || !(h > 0.0) || !(h < eps / 4.0) || !(x_max > eps + 2.0 * h)) {
    throw Error(ErrorKind::BadGrid, "need eps > 0, 0 < h < eps/4, x_max > eps + 2h");
  }
  const int n = static_cast<int>(std::lround((x_max - eps) / h));
  std::vector<double> nodes(static_cast<std::size_t>(n));
  std::vector<double> right(nodes.size()), left(nodes.size());
  for (int k = 0; k < n; ++k) {
    nodes[k] = eps + (k + 0.5) * h;
    right[k] = q(nodes[k]);
    left[k] = q(-nodes[k]);
    if (!std::isfinite(right[k]) || !std::isfinite(left[k])) {
      throw Error(ErrorKind::BadGrid, "potential not finite on the grid");
    }
    if (std::abs(right[k] - left[k]) > 1e-12 * std::max(1.0, std::abs(right[k]))) {
      throw Error(ErrorKind::OddPotential, "q(-x) != q(x) at x = " + std::to_string(nodes[k]));
    }
  }

  MatX bulk = MatX::Zero(2 * n, 2 * n);
  const double inv = 1.0 / (h * h);
  for (int half = 0; half < 2; ++half) {
    const int o = half * n;
    const auto& qv = half == 0 ? right : left;
    for (int k = 0; k < n; ++k) {
      bulk(o + k, o + k) = 2.0 * inv + qv[k];
      if (k + 1 < n) {
        bulk(o + k, o + k + 1) = -inv;
        bulk(o + k + 1, o + k) = -inv;
      }
    }
  }
  return {q, eps, x_max, h, n, std::move(nodes), std::move(bulk)};
}

MatX schrodinger_apply_extension(const SchrodingerModel& model, const ExtensionU& ext) {
  const BoundaryPredicate pred = extension_from_unitary(schrodinger_image_rep(), ext);
  // K1 (phi0 - g)/h + K0 (g + phi0)/2 = 0  =>  C g + B phi0 = 0
  const double h = model.h;
  const Mat2 c = 0.5 * pred.k0 - pred.k1 / h;
  const Mat2 b = 0.5 * pred.k0 + pred.k1 / h;
  Eigen::JacobiSVD<Mat2> svd(c);
  const auto s = svd.singularValues();
  if (s(0) == 0.0 || s(1) / s(0) < 1e-12) {
    throw Error(ErrorKind::PredicateDegenerate, "ghost values are not determined by the predicate");
  }
  const Mat2 ghost = -c.inverse() * b;
  MatX d = model.bulk;
  const Eigen::Index first[2] = {0, model.n};
  for (int s1 = 0; s1 < 2; ++s1) {
    for (int t = 0; t < 2; ++t) d(first[s1], first[t]) -= ghost(s1, t) / (h * h);
  }
  return d;
}

}  // namespace krein
