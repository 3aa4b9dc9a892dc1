#include "krein/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "krein/boundary_triplet.hpp"
#include "krein/clifford.hpp"
#include "krein/defect_space.hpp"
#include "krein/models.hpp"
#include "krein/spectral.hpp"

namespace krein {

namespace {

using nlohmann::json;

std::string fmt_e(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

bool is_config_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::Config:
    case ErrorKind::NotUnitary:
    case ErrorKind::NonUnitVector:
    case ErrorKind::BadGrid:
    case ErrorKind::OddPotential:
      return true;
    default:
      return false;
  }
}

Mat2 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat2 z;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) z(i, j) = cplx(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Mat2> qr(z);
  Mat2 q = qr.householderQ();
  const Mat2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

SphereVec config_alpha(const RunConfig& cfg) {
  const auto& a = cfg.extension.alpha;
  try {
    return SphereVec(a[0], a[1], a[2]);
  } catch (const Error&) {
    throw Error(ErrorKind::Config, "extension.alpha must be a unit vector");
  }
}

Mat2 require_unitary(const RunConfig& cfg) {
  if (!cfg.extension.unitary) throw Error(ErrorKind::Config, "extension.unitary is required");
  return *cfg.extension.unitary;
}

void require_model(const RunConfig& cfg, const std::string& kind, const std::string& command) {
  if (cfg.model.kind != kind) {
    throw Error(ErrorKind::Config, command + " requires model.kind = " + kind);
  }
}

ShiftModel shift_model_of(const RunConfig& cfg) {
  return ShiftModel(cfg.model.length, cfg.model.points);
}

SchrodingerModel schrodinger_model_of(const RunConfig& cfg) {
  return schrodinger_assemble(Potential::from_name(cfg.model.potential, cfg.model.c), cfg.model.eps,
                              cfg.model.x_max, cfg.model.h);
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  double residual;
  double tolerance;
};

std::vector<Check> run_checks(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<Check> checks;
  const CliffordRep rep = CliffordRep::defect_basis();

  double inv = 0.0, anti = 0.0, sum = 0.0, inter = 0.0;
  for (int k = 0; k < 200; ++k) {
    const SphereVec a = random_sphere(rng), b = random_sphere(rng);
    const MatX ja = make_j_alpha(rep, a), jb = make_j_alpha(rep, b);
    inv = std::max({inv, max_abs(ja * ja - rep.identity()), max_abs(ja - ja.adjoint())});
    const MatX jo = make_j_alpha(rep, orthogonalize_beta(a, b));
    anti = std::max(anti, max_abs(ja * jo + jo * ja));
    const SumSymmetry s = sum_symmetry(a, b);
    sum = std::max(sum, max_abs(ja + jb - s.scale * make_j_alpha(rep, s.direction)));
    const MatX w = w_symmetry(rep, a, b).matrix;
    inter = std::max(inter, max_abs(jb * w - w * ja));
  }
  checks.push_back({"clifford_involution", inv, 1e-12});
  checks.push_back({"clifford_anticommutation", anti, 1e-12});
  checks.push_back({"clifford_sum_law", sum, 1e-12});
  checks.push_back({"intertwining", inter, 1e-12});

  {
    const DefectModel dm = DefectModel::standard();
    const MatX& j = dm.rep.j();
    const MatX& r = dm.rep.r();
    const MatX e = MatX::Identity(4, 4);
    double res = std::max(max_abs(dm.z * j - j * dm.z), max_abs(dm.z * r - r * dm.z));
    const double zs[4] = {1, 1, -1, -1}, js[4] = {1, -1, 1, -1};
    const int rs[4] = {1, 0, 3, 2};
    for (int i = 0; i < 4; ++i) {
      res = std::max(res, max_abs(dm.z * e.col(i) - zs[i] * e.col(i)));
      res = std::max(res, max_abs(j * e.col(i) - js[i] * e.col(i)));
      res = std::max(res, max_abs(r * e.col(i) - e.col(rs[i])));
    }
    checks.push_back({"defect_relations", res, 1e-12});
  }

  const TripletModel triplet = shift_boundary_triplet(ShiftModel());
  {
    std::normal_distribution<double> normal(0.0, 1.0);
    double res = 0.0;
    for (int k = 0; k < 10; ++k) {
      VecX tf(4), tg(4);
      for (int i = 0; i < 4; ++i) {
        tf(i) = cplx(normal(rng), normal(rng));
        tg(i) = cplx(normal(rng), normal(rng));
      }
      res = std::max(res, triplet.green_residual(tf, tg));
    }
    checks.push_back({"green_identity", res, 1e-10});
  }
  {
    double res = 0.0;
    for (int k = 0; k < 100; ++k) {
      const SphereVec a = random_sphere(rng);
      const MatX ta = triplet.trace_action(a);
      const Mat2 ja = triplet.image_j_alpha(a);
      res = std::max({res, max_abs(ja * triplet.gamma0 - triplet.gamma0 * ta),
                      max_abs(ja * triplet.gamma1 - triplet.gamma1 * ta)});
    }
    checks.push_back({"equivariance", res, 1e-12});
  }
  {
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.1, 3.0);
    double res = 0.0;
    for (int k = 0; k < 20; ++k) {
      const cplx mu(re(rng), im(rng));
      res = std::max(res, max_abs(shift_weyl(triplet, mu) - I_unit * Mat2::Identity()));
      res = std::max(res, max_abs(shift_weyl(triplet, std::conj(mu)) + I_unit * Mat2::Identity()));
    }
    checks.push_back({"weyl_constancy", res, 1e-10});
  }
  {
    double res = 0.0;
    for (int k = 0; k < 50; ++k) {
      const ExtensionU ext(random_unitary(rng), random_sphere(rng));
      const SphereVec beta = random_sphere(rng);
      const Mat2 w(w_symmetry(triplet.image_rep, ext.alpha, beta).matrix);
      const ExtensionU moved = transport_unitary(triplet.image_rep, ext, beta);
      const auto basis = extension_from_unitary(triplet.image_rep, ext).basis();
      const BoundaryPredicate target = extension_from_unitary(triplet.image_rep, moved);
      for (int c = 0; c < 2; ++c) {
        const Vec2 b1 = basis.col(c).head<2>(), b0 = basis.col(c).tail<2>();
        res = std::max(res, target.residual(w * b1, w * b0));
      }
    }
    checks.push_back({"transport_law", res, 1e-10});
  }
  {
    const SchrodingerModel model = schrodinger_assemble(Potential{}, 0.1, 1.1, 0.02);
    const CliffordRep image = schrodinger_image_rep();
    double transport = 0.0, sym = 0.0;
    for (int k = 0; k < 10; ++k) {
      const ExtensionU ext(random_unitary(rng), random_sphere(rng));
      const SphereVec beta = random_sphere(rng);
      const MatX d = schrodinger_apply_extension(model, ext);
      const MatX w = model.lift(Mat2(w_symmetry(image, ext.alpha, beta).matrix));
      const MatX moved = schrodinger_apply_extension(model, transport_unitary(image, ext, beta));
      const double scale = max_abs(d);
      transport = std::max(transport, max_abs(w * d * w - moved) / scale);
      const MatX j = model.lift(Mat2(make_j_alpha(image, ext.alpha)));
      sym = std::max(sym, max_abs(j * d.adjoint() * j - d) / scale);
    }
    checks.push_back({"schrodinger_transport", transport, 1e-12});
    checks.push_back({"schrodinger_j_symmetry", sym, 1e-12});
  }

  if (cfg.tolerance) {
    for (auto& c : checks) c.tolerance = *cfg.tolerance;
  }
  return checks;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<Check> checks = run_checks(cfg);
  bool all = true;
  std::ostringstream ss;
  if (cfg.format == "csv") {
    ss << "check,residual,tolerance,pass\n";
    for (const auto& c : checks) {
      const bool ok = c.residual <= c.tolerance;
      all = all && ok;
      ss << c.name << ',' << fmt_e(c.residual) << ',' << fmt_e(c.tolerance) << ',' << (ok ? 1 : 0) << '\n';
    }
  } else {
    json j = json::object();
    j["checks"] = json::array();
    for (const auto& c : checks) {
      const bool ok = c.residual <= c.tolerance;
      all = all && ok;
      j["checks"].push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", ok}});
    }
    j["passed"] = all;
    ss << j.dump(2) << '\n';
  }
  out << ss.str();
  return all ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// classify

json vec_json(const SphereVec& v) { return json::array({v[0], v[1], v[2]}); }

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "json") throw Error(ErrorKind::Config, "classify writes JSON only");
  const SphereVec alpha = config_alpha(cfg);
  const ExtensionU ext(require_unitary(cfg), alpha);
  const bool shift = cfg.model.kind == "shift";
  const std::optional<TripletModel> triplet =
      shift ? std::optional<TripletModel>(shift_boundary_triplet(shift_model_of(cfg))) : std::nullopt;
  const CliffordRep image = shift ? triplet->image_rep : schrodinger_image_rep();

  const UnitaryClass cls = classify_unitary(image, ext, 64);
  json j = json::object();
  j["alpha"] = vec_json(alpha);
  j["self_adjoint_in_Upsilon"] = cls.in_upsilon;
  j["commuting_betas"] = json::array();
  for (std::size_t i = 0; i < cls.betas.size(); ++i) {
    if (cls.commutes[i]) j["commuting_betas"].push_back(vec_json(cls.betas[i]));
  }
  j["empty_resolvent"] = cls.empty_resolvent;
  j["witness_beta"] = cls.witness_beta ? vec_json(*cls.witness_beta) : json(nullptr);

  if (shift) {
    // Classification is relative to alpha0 = (1,0,0); move the boundary data there first.
    const SphereVec alpha0(1.0, 0.0, 0.0);
    const Mat2 w(w_symmetry(image, alpha, alpha0).matrix);
    Eigen::Matrix<cplx, 4, 2> data = extension_from_unitary(image, ext).basis();
    data.topRows<2>() = (w * data.topRows<2>()).eval();
    data.bottomRows<2>() = (w * data.bottomRows<2>()).eval();
    json form = json::object();
    try {
      const ExtensionSubspace sub = shift_defect_subspace(*triplet, data);
      const EmptyResolventClass ec = classify_empty_resolvent(DefectModel::standard(), sub, true);
      form["class"] = to_string(ec.kind);
      form["witness_beta"] = ec.witness_beta ? vec_json(*ec.witness_beta) : json(nullptr);
      if (ec.family) {
        form["phi"] = ec.family->phi;
        form["gamma"] = ec.family->gamma;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MalformedSubspace) throw;
      form["class"] = "not_neutral";
    }
    j["subspace_form"] = form;
  } else {
    j["subspace_form"] = nullptr;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// weyl

int cmd_weyl(const RunConfig& cfg, std::ostream& out) {
  require_model(cfg, "shift", "weyl");
  const TripletModel triplet = shift_boundary_triplet(shift_model_of(cfg));
  std::vector<cplx> mus = cfg.mu;
  if (mus.empty()) mus = {I_unit, -I_unit, 2.0 * I_unit, -2.0 * I_unit};
  const double tol = cfg.tolerance.value_or(1e-10);

  bool all = true;
  struct Row {
    cplx mu;
    Mat2 m;
    double deviation;
  };
  std::vector<Row> rows;
  for (const cplx& mu : mus) {
    const Mat2 m = shift_weyl(triplet, mu);
    const double sign = mu.imag() > 0.0 ? 1.0 : -1.0;
    const double dev = max_abs(m - sign * I_unit * Mat2::Identity());
    all = all && dev <= tol;
    rows.push_back({mu, m, dev});
  }

  if (cfg.format == "csv") {
    out << "mu_re,mu_im,m00_re,m00_im,m01_re,m01_im,m10_re,m10_im,m11_re,m11_im,deviation\n";
    for (const auto& r : rows) {
      out << fmt_e(r.mu.real()) << ',' << fmt_e(r.mu.imag());
      for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) out << ',' << fmt_e(r.m(i, k).real()) << ',' << fmt_e(r.m(i, k).imag());
      }
      out << ',' << fmt_e(r.deviation) << '\n';
    }
  } else {
    json j = json::array();
    for (const auto& r : rows) {
      json m = json::array();
      for (int i = 0; i < 2; ++i) {
        json row = json::array();
        for (int k = 0; k < 2; ++k) row.push_back({r.m(i, k).real(), r.m(i, k).imag()});
        m.push_back(row);
      }
      j.push_back({{"mu", {r.mu.real(), r.mu.imag()}}, {"M", m}, {"deviation", r.deviation}});
    }
    out << j.dump(2) << '\n';
  }
  return all ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// resolvent-check

int cmd_resolvent_check(const RunConfig& cfg, std::ostream& out) {
  require_model(cfg, "shift", "resolvent-check");
  const ShiftModel model = shift_model_of(cfg);
  const TripletModel triplet = shift_boundary_triplet(model);
  const double tol = cfg.tolerance.value_or(1e-8);

  struct Case {
    ExtensionU ext;
    cplx mu;
    ShiftSource source;
  };
  std::vector<Case> cases;
  if (cfg.extension.unitary) {
    const ExtensionU ext(*cfg.extension.unitary, config_alpha(cfg));
    std::vector<cplx> mus = cfg.mu;
    if (mus.empty()) mus = {I_unit};
    for (const cplx& mu : mus) cases.push_back({ext, mu, gaussian_source(Vec2(1.0, 0.5 * I_unit), 0.3, 0.8)});
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    while (static_cast<int>(cases.size()) < cfg.samples) {
      const ExtensionU ext(random_unitary(rng), random_sphere(rng));
      const double im = 0.3 + 1.7 * u01(rng);
      const cplx mu(-2.0 + 4.0 * u01(rng), u01(rng) < 0.5 ? im : -im);
      const Vec2 amp(cplx(normal(rng), normal(rng)), cplx(normal(rng), normal(rng)));
      const ShiftSource src = gaussian_source(amp, -2.0 + 4.0 * u01(rng), 0.5 + u01(rng));
      try {
        const Mat2 t = cayley_T(triplet.image_rep, ext);
        if (std::abs((shift_weyl(triplet, mu) - t).determinant()) <= 1e-12) continue;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotDisjoint) continue;
        throw;
      }
      cases.push_back({ext, mu, src});
    }
  }

  bool all = true;
  std::vector<double> errors;
  for (const auto& c : cases) {
    const auto in = shift_resolvent_ingredients(model, triplet, c.source);
    const ShiftFunction formula = krein_resolvent(triplet.image_rep, c.ext, c.mu, in);
    const ShiftFunction direct = shift_resolvent_direct(model, triplet, c.ext, c.mu, c.source);
    const double err = (formula - direct).norm() / direct.norm();
    all = all && err <= tol;
    errors.push_back(err);
  }

  if (cfg.format == "csv") {
    out << "index,mu_re,mu_im,relative_error,pass\n";
    for (std::size_t i = 0; i < cases.size(); ++i) {
      out << i << ',' << fmt_e(cases[i].mu.real()) << ',' << fmt_e(cases[i].mu.imag()) << ','
          << fmt_e(errors[i]) << ',' << (errors[i] <= tol ? 1 : 0) << '\n';
    }
  } else {
    json j = json::array();
    for (std::size_t i = 0; i < cases.size(); ++i) {
      j.push_back({{"mu", {cases[i].mu.real(), cases[i].mu.imag()}},
                   {"relative_error", errors[i]},
                   {"pass", errors[i] <= tol}});
    }
    out << j.dump(2) << '\n';
  }
  return all ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  require_model(cfg, "schrodinger", "sweep");
  const SchrodingerModel model = schrodinger_model_of(cfg);
  const UnitaryFamily family = named_family(cfg.extension.family.empty() ? "theta" : cfg.extension.family);
  const SphereVec alpha = config_alpha(cfg);
  const std::vector<SpectrumReport> reports = sweep(family, alpha, model, cfg.extension.grid);

  if (cfg.format == "csv") {
    out << "t,pairing_residual,max_imag";
    for (Eigen::Index k = 0; k < model.size(); ++k) out << ",l" << k << "_re,l" << k << "_im";
    out << '\n';
    for (const auto& r : reports) {
      out << fmt_e(r.parameters.at(0).second) << ',' << fmt_e(r.pairing_residual) << ',' << fmt_e(r.max_imag);
      for (const cplx& l : r.eigenvalues) out << ',' << fmt_e(l.real()) << ',' << fmt_e(l.imag());
      out << '\n';
    }
  } else {
    json j = json::array();
    for (const auto& r : reports) {
      json ev = json::array();
      for (const cplx& l : r.eigenvalues) ev.push_back({l.real(), l.imag()});
      j.push_back({{"t", r.parameters.at(0).second},
                   {"pairing_residual", r.pairing_residual},
                   {"max_imag", r.max_imag},
                   {"eigenvalues", ev}});
    }
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using Command = std::function<int(const RunConfig&, std::ostream&)>;
  Command cmd;
  if (name == "verify") cmd = cmd_verify;
  else if (name == "classify") cmd = cmd_classify;
  else if (name == "weyl") cmd = cmd_weyl;
  else if (name == "resolvent-check") cmd = cmd_resolvent_check;
  else if (name == "sweep") cmd = cmd_sweep;
  else {
    err << "unknown command '" << name << "'\n";
    return kExitConfig;
  }
  if (!cfg.command.empty() && cfg.command != name) {
    err << "config command '" << cfg.command << "' does not match '" << name << "'\n";
    return kExitConfig;
  }

  // Results are buffered so a failing run leaves no partial output file.
  std::ostringstream buffer;
  int code;
  try {
    code = cmd(cfg, buffer);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return is_config_error(e.kind()) ? kExitConfig : kExitFailure;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitFailure;
  }

  if (cfg.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file || !(file << buffer.str())) {
      err << "cannot write '" << cfg.out << "'\n";
      return kExitFailure;
    }
  }
  return code;
}

}  // namespace krein
