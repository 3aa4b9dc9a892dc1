#include "krein/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <complex>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "krein/kernels.hpp"

namespace krein {

SpectrumReport compute_spectrum(const MatX& d, bool parallel) {
  if (d.rows() != d.cols()) throw Error(ErrorKind::EigensolverFailure, "matrix not square");
  if (!d.allFinite()) throw Error(ErrorKind::EigensolverFailure, "non-finite entries");

  SpectrumReport r;
  const double scale = std::max(1.0, max_abs(d));
  r.hermitian = d.size() == 0 || max_abs(d - d.adjoint()) <= 1e-13 * scale;
  if (d.size() == 0) return r;

  if (r.hermitian) {
    Eigen::SelfAdjointEigenSolver<MatX> es(d, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw Error(ErrorKind::EigensolverFailure, "self-adjoint solver");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) r.eigenvalues.emplace_back(es.eigenvalues()(i), 0.0);
  } else {
    // zgeev: balancing, blocked Hessenberg reduction and QR
    MatX a = d;
    const auto n = static_cast<lapack_int>(a.rows());
    r.eigenvalues.resize(static_cast<std::size_t>(n));
    const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, r.eigenvalues.data(),
                                          nullptr, 1, nullptr, 1);
    if (info != 0) throw Error(ErrorKind::EigensolverFailure, "zgeev info " + std::to_string(info));
  }
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(), [](const cplx& a, const cplx& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (const cplx& l : r.eigenvalues) r.max_imag = std::max(r.max_imag, std::abs(l.imag()));
  r.pairing_residual = parallel ? kernels::omp::pairing_residual(r.eigenvalues)
                                : kernels::serial::pairing_residual(r.eigenvalues);
  return r;
}

EquivalenceReport verify_unitary_equivalence(const MatX& d, const MatX& w, bool parallel) {
  const SpectrumReport a = compute_spectrum(d, parallel);
  // Lifted symmetries have a few nonzeros per row; skip the dense products then.
  MatX wdw;
  if ((w.array() != cplx(0.0)).count() <= 4 * w.rows()) {
    const Eigen::SparseMatrix<cplx> ws = w.sparseView();
    const MatX dw = d * ws;
    wdw = ws * dw;
  } else {
    wdw = w * d * w;
  }
  const SpectrumReport b = compute_spectrum(wdw, parallel);
  EquivalenceReport out;
  out.matched_distance = parallel ? kernels::omp::matched_distance(a.eigenvalues, b.eigenvalues)
                                  : kernels::serial::matched_distance(a.eigenvalues, b.eigenvalues);
  out.passed = out.matched_distance < 1e-8;
  return out;
}

UnitaryFamily named_family(const std::string& name) {
  if (name == "theta") {
    return {name, [](double t) {
              Mat2 u;
              u << std::cos(t), -I_unit * std::sin(t), I_unit * std::sin(t), -std::cos(t);
              return u;
            }};
  }
  if (name == "phase") {
    return {name, [](double t) -> Mat2 { return std::exp(I_unit * t) * Mat2::Identity(); }};
  }
  if (name == "identity") {
    return {name, [](double) -> Mat2 { return Mat2::Identity(); }};
  }
  throw Error(ErrorKind::Config, "unknown unitary family '" + name + "'");
}

std::vector<SpectrumReport> sweep(const UnitaryFamily& family, const SphereVec& alpha,
                                  const SchrodingerModel& model, const std::vector<double>& grid,
                                  bool parallel) {
  std::vector<SpectrumReport> out(grid.size());
  auto task = [&](std::size_t i) {
    const ExtensionU ext(family.at(grid[i]), alpha);
    // Nested parallelism stays off: the grid loop already owns the threads.
    out[i] = compute_spectrum(schrodinger_apply_extension(model, ext), false);
    out[i].parameters = {{"t", grid[i]}};
  };
  if (parallel) {
    kernels::omp::for_each_index(grid.size(), task);
  } else {
    kernels::serial::for_each_index(grid.size(), task);
  }
  return out;
}

}  // namespace krein
