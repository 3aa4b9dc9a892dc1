#include "doctest.h"

#include <cmath>
#include <numbers>

#include "krein/defect_space.hpp"

using namespace krein;

namespace {

constexpr double pi = std::numbers::pi;

Vec4 basis(int k) {
  Vec4 v = Vec4::Zero();
  v(k) = 1.0;
  return v;
}

enum { Epp = 0, Epm = 1, Emp = 2, Emm = 3 };

}  // namespace

TEST_CASE("defect model reproduces the basis relations entry-exactly") {
  const auto m = DefectModel::standard();
  const MatX& j = m.rep.j();
  const MatX& r = m.rep.r();
  CHECK((m.z * basis(Epp) - basis(Epp)).norm() == 0.0);
  CHECK((m.z * basis(Epm) - basis(Epm)).norm() == 0.0);
  CHECK((m.z * basis(Emp) + basis(Emp)).norm() == 0.0);
  CHECK((m.z * basis(Emm) + basis(Emm)).norm() == 0.0);
  CHECK((j * basis(Epp) - basis(Epp)).norm() == 0.0);
  CHECK((j * basis(Epm) + basis(Epm)).norm() == 0.0);
  CHECK((j * basis(Emp) - basis(Emp)).norm() == 0.0);
  CHECK((j * basis(Emm) + basis(Emm)).norm() == 0.0);
  CHECK((r * basis(Epp) - basis(Epm)).norm() == 0.0);
  CHECK((r * basis(Epm) - basis(Epp)).norm() == 0.0);
  CHECK((r * basis(Emm) - basis(Emp)).norm() == 0.0);
  CHECK((r * basis(Emp) - basis(Emm)).norm() == 0.0);
  CHECK(max_abs(j * m.z - m.z * j) == 0.0);
  CHECK(max_abs(r * m.z - m.z * r) == 0.0);
  CHECK(max_abs(j * r + r * j) == 0.0);
}

TEST_CASE("indefinite metric examples") {
  const auto m = DefectModel::standard();
  const SphereVec j(1, 0, 0);
  CHECK(indefinite_metric(m, j, basis(Epp), basis(Epp)) == cplx(1.0));
  for (double g = 0.0; g < 2 * pi; g += 0.37) {
    const Vec4 d1 = basis(Epp) + std::polar(1.0, g) * basis(Epm);
    CHECK(std::abs(indefinite_metric(m, j, d1, d1)) < 1e-15);
  }
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto beta = random_sphere(rng);
    CHECK(std::abs(indefinite_metric(m, beta, basis(Epp), basis(Emm))) == 0.0);
  }
}

TEST_CASE("indefinite metric is Hermitian-symmetric") {
  const auto m = DefectModel::standard();
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto beta = random_sphere(rng);
    const Vec4 x = Vec4::Random(), y = Vec4::Random();
    CHECK(std::abs(indefinite_metric(m, beta, x, y) - std::conj(indefinite_metric(m, beta, y, x))) < 1e-14);
  }
}

TEST_CASE("subspace validation") {
  CHECK_THROWS_AS(ExtensionSubspace(basis(0), 2.0 * basis(0)), Error);
  CHECK_NOTHROW(ExtensionSubspace(basis(0), basis(3)));
}

TEST_CASE("is_neutral examples") {
  const auto m = DefectModel::standard();
  for (double g = 0.0; g < 2 * pi; g += 0.3) {
    const auto sub = EmptyResolventFamily{0.0, g}.subspace();
    CHECK(is_neutral(m, SphereVec::normalized(0, std::sin(g), std::cos(g)), sub));
    CHECK(is_neutral(m, SphereVec(1, 0, 0), sub));
  }
  // Residual oracle: [d1,d1] = 2 (beta2 cos g - beta3 sin g) = 2 cos(pi/4) for beta = (0,1,0).
  const auto sub = EmptyResolventFamily{0.0, pi / 4}.subspace();
  CHECK_FALSE(is_neutral(m, SphereVec(0, 1, 0), sub));
  CHECK(neutrality_residual(m, SphereVec(0, 1, 0), sub) == doctest::Approx(2 * std::cos(pi / 4)));
}

TEST_CASE("[d1, d2] vanishes for every gamma and every beta orthogonal to J") {
  const auto m = DefectModel::standard();
  for (double g = 0.0; g < 2 * pi; g += 0.21) {
    const auto sub = EmptyResolventFamily{0.0, g}.subspace();
    for (double t = 0.0; t < 2 * pi; t += 0.5) {
      const SphereVec beta = SphereVec::normalized(0, std::sin(t), std::cos(t));
      CHECK(std::abs(indefinite_metric(m, beta, sub.d1(), sub.d2())) < 1e-15);
    }
  }
}

TEST_CASE("solve_neutrality_single") {
  auto [b2, b3] = solve_neutrality_single(0.0);
  CHECK(b2 == 0.0);
  CHECK(b3 == 1.0);
  std::tie(b2, b3) = solve_neutrality_single(pi / 2);
  CHECK(b2 == doctest::Approx(1.0));
  CHECK(std::abs(b3) < 1e-15);
  std::tie(b2, b3) = solve_neutrality_single(pi / 4);
  CHECK(b2 == doctest::Approx(std::numbers::sqrt2 / 2));
  CHECK(b3 == doctest::Approx(std::numbers::sqrt2 / 2));
  for (double g = 0.0; g < 2 * pi; g += 0.1) {
    std::tie(b2, b3) = solve_neutrality_single(g);
    CHECK(std::abs(std::cos(g) * b2 - std::sin(g) * b3) < 1e-14);
  }
}

TEST_CASE("solve_neutrality_system") {
  CHECK_FALSE(solve_neutrality_system(pi / 4, 0.3).has_value());
  auto s = solve_neutrality_system(0.0, 1.1);
  REQUIRE(s);
  CHECK(s->first == doctest::Approx(std::sin(1.1)));
  CHECK(s->second == doctest::Approx(std::cos(1.1)));
  s = solve_neutrality_system(pi / 2, 0.0);
  REQUIRE(s);
  CHECK(s->first == doctest::Approx(1.0));
  CHECK(std::abs(s->second) < 1e-15);

  // Both equations hold for every degenerate phi.
  for (double phi : {0.0, pi / 2, pi, 3 * pi / 2}) {
    for (double g = 0.0; g < 2 * pi; g += 0.4) {
      const auto sol = solve_neutrality_system(phi, g);
      REQUIRE(sol);
      const auto [b2, b3] = *sol;
      CHECK(std::abs(std::cos(phi + g) * b2 - std::sin(phi + g) * b3) < 1e-12);
      CHECK(std::abs(std::cos(phi - g) * b2 + std::sin(phi - g) * b3) < 1e-12);
    }
  }
}

TEST_CASE("classify_empty_resolvent examples") {
  const auto m = DefectModel::standard();

  auto c = classify_empty_resolvent(m, EmptyResolventFamily{0.0, pi / 3}.subspace(), false);
  CHECK(c.kind == EmptyResolventClass::Kind::InXiPair);
  REQUIRE(c.witness_beta);
  CHECK(c.witness_beta->a1() == 0.0);
  CHECK(c.witness_beta->a2() == doctest::Approx(std::sin(pi / 3)));
  CHECK(c.witness_beta->a3() == doctest::Approx(std::cos(pi / 3)));

  c = classify_empty_resolvent(m, EmptyResolventFamily{pi / 4, 0.0}.subspace(), true);
  CHECK(c.kind == EmptyResolventClass::Kind::InXiOnly);
  CHECK_FALSE(c.witness_beta);

  CHECK_THROWS_AS(classify_empty_resolvent(m, ExtensionSubspace(basis(Epp), basis(Emm)), false), Error);
}

TEST_CASE("classification accepts any basis of the same subspace") {
  const auto m = DefectModel::standard();
  const auto sub = EmptyResolventFamily{0.0, 2.0}.subspace();
  const Vec4 u = cplx(0.3, 1.0) * sub.d1() + cplx(-2.0, 0.5) * sub.d2();
  const Vec4 v = cplx(1.5, 0.0) * sub.d1() + cplx(0.0, 0.7) * sub.d2();
  const auto c = classify_empty_resolvent(m, ExtensionSubspace(u, v), false);
  CHECK(c.kind == EmptyResolventClass::Kind::InXiPair);
  REQUIRE(c.witness_beta);
  CHECK(is_neutral(m, *c.witness_beta, sub));
}

TEST_CASE("J-neutral subspaces outside the family are not empty-resolvent") {
  const auto m = DefectModel::standard();
  // e++ + e-+ and e+- + e-- are J Z-neutral but do not have the d-form.
  const ExtensionSubspace sub(basis(Epp) + basis(Emp), basis(Epm) + basis(Emm));
  REQUIRE(is_neutral(m, SphereVec(1, 0, 0), sub));
  CHECK(classify_empty_resolvent(m, sub, false).kind == EmptyResolventClass::Kind::NotEmptyResolvent);
  CHECK(classify_empty_resolvent(m, sub, true).kind == EmptyResolventClass::Kind::NotEmptyResolvent);
  // phi != 0 members are outside Xi when the Weyl function is not constant.
  CHECK(classify_empty_resolvent(m, EmptyResolventFamily{0.5, 0.2}.subspace(), false).kind ==
        EmptyResolventClass::Kind::NotEmptyResolvent);
}

TEST_CASE("witness beta certifies neutrality across the constant-Weyl grid") {
  const auto m = DefectModel::standard();
  for (double phi : {0.0, pi / 2, pi, 3 * pi / 2}) {
    for (double g = 0.05; g < 2 * pi; g += 0.3) {
      const auto sub = EmptyResolventFamily{phi, g}.subspace();
      const auto c = classify_empty_resolvent(m, sub, true);
      REQUIRE(c.kind == EmptyResolventClass::Kind::InXiPair);
      CHECK(is_neutral(m, *c.witness_beta, sub));
    }
  }
}
