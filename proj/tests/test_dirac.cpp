#include <doctest.h>

#include "oracle.hpp"
#include "sforge/dirac.hpp"

using namespace sforge;

namespace {

double diff(const Vec4& a, const oracle::V4& b) { return (oracle::to_eigen(a) - b).cwiseAbs().maxCoeff(); }

int idx(Spin s) { return s == Spin::Up ? 0 : 1; }

}  // namespace

TEST_CASE("rest-frame spinors") {
  const auto rest = FourMomentum::on_shell(1.0, {0, 0, 0});
  const auto u = u_spinor(rest, Spin::Up, GammaBasis::Standard);
  CHECK(u.components == Vec4{1.0, 0.0, 0.0, 0.0});
  const auto v = v_spinor(rest, Spin::Down, GammaBasis::Standard);
  CHECK(v.components == Vec4{0.0, 0.0, 0.0, 1.0});
  const auto uc = u_spinor(rest, Spin::Up, GammaBasis::Chiral);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(diff(uc.components, oracle::V4(r, 0, r, 0)) < 1e-15);
  // phi_R(0) = +phi_L(0) for u, -phi_L(0) for v
  CHECK(charge_rest_check(upper(uc.components), lower(uc.components)) == ChargeSign::Plus);
  const auto vc = v_spinor(rest, Spin::Up, GammaBasis::Chiral);
  CHECK(charge_rest_check(upper(vc.components), lower(vc.components)) == ChargeSign::Minus);
  CHECK_FALSE(charge_rest_check(Vec2{1.0, 0.0}, Vec2{0.0, 1.0}).has_value());
  CHECK_THROWS_AS(charge_rest_check(Vec2{}, Vec2{1.0, 0.0}), Error);
}

TEST_CASE("standard-basis spinors equal the textbook formula at random momenta") {
  oracle::Gen g(21);
  for (int i = 0; i < 100; ++i) {
    const double m = g.uniform(0.1, 10.0);
    const auto pv = g.vector(10 * m);
    const auto p = FourMomentum::on_shell(m, pv);
    const auto k = oracle::kin(m, pv);
    for (Spin s : {Spin::Up, Spin::Down}) {
      const double scale = std::sqrt(p.energy() / m);
      for (Route route : {Route::ClosedForm, Route::Boost}) {
        CHECK(diff(u_spinor(p, s, GammaBasis::Standard, Normalization::UnitNorm, route).components,
                   oracle::u_standard(k, idx(s))) < 1e-13 * scale);
        CHECK(diff(v_spinor(p, s, GammaBasis::Standard, Normalization::UnitNorm, route).components,
                   oracle::v_standard(k, idx(s))) < 1e-13 * scale);
      }
      // Mass dimension differs by sqrt(m).
      CHECK(diff(u_spinor(p, s, GammaBasis::Standard, Normalization::MassDim).components,
                 std::sqrt(m) * oracle::u_standard(k, idx(s))) < 1e-13 * scale * std::sqrt(m));
    }
  }
}

TEST_CASE("Dirac equation and normalisation table at random momenta") {
  oracle::Gen g(22);
  for (int i = 0; i < 100; ++i) {
    const double m = g.uniform(0.1, 10.0);
    const auto p = FourMomentum::on_shell(m, g.vector(10 * m));
    for (GammaBasis b : {GammaBasis::Chiral, GammaBasis::Standard}) {
      for (Spin s : {Spin::Up, Spin::Down}) {
        const auto u = u_spinor(p, s, b);
        const auto v = v_spinor(p, s, b);
        CHECK(dirac_residual(u) < 1e-12 * (p.energy() + m));
        CHECK(dirac_residual(v) < 1e-12 * (p.energy() + m));
        for (Spin t : {Spin::Up, Spin::Down}) {
          const double delta = s == t ? 1.0 : 0.0;
          CHECK(std::abs(dirac_bilinear(u, u_spinor(p, t, b)) - delta) < 1e-12);
          CHECK(std::abs(dirac_bilinear(v, v_spinor(p, t, b)) + delta) < 1e-12);
          CHECK(std::abs(dirac_bilinear(u, v_spinor(p, t, b))) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("slash(p) squares to m^2") {
  oracle::Gen g(23);
  for (int i = 0; i < 50; ++i) {
    const double m = g.uniform(0.1, 10.0);
    const auto pv = g.vector(10 * m);
    const auto p = FourMomentum::on_shell(m, pv);
    const Mat4 s = slash(p);
    CHECK((s * s - (m * m) * Mat4::identity()).max_abs() < 1e-12 * p.energy() * p.energy());
    const auto k = oracle::kin(m, pv);
    CHECK((oracle::to_eigen(s) - oracle::slash_chiral(k.e, pv)).cwiseAbs().maxCoeff() < 1e-13 * p.energy());
  }
}

TEST_CASE("parity: P u = +u, P v = -v") {
  oracle::Gen g(24);
  for (int i = 0; i < 50; ++i) {
    const double m = g.uniform(0.1, 10.0);
    const auto p = FourMomentum::on_shell(m, g.vector(10 * m));
    for (GammaBasis b : {GammaBasis::Chiral, GammaBasis::Standard}) {
      for (Spin s : {Spin::Up, Spin::Down}) {
        const auto pu = parity_apply(u_spinor(p.reversed(), s, b));
        const auto pv = parity_apply(v_spinor(p.reversed(), s, b));
        CHECK((pu.components - u_spinor(p, s, b).components).norm() < 1e-12 * p.energy() / m);
        CHECK((pv.components + v_spinor(p, s, b).components).norm() < 1e-12 * p.energy() / m);
        CHECK(pu.momentum.pz() == doctest::Approx(p.pz()));
      }
    }
  }
}

TEST_CASE("massless spinors: mass dimension only") {
  const auto p = FourMomentum::on_shell(0.0, {0.0, 0.0, 2.0});
  CHECK_THROWS_AS(u_spinor(p, Spin::Up), Error);
  CHECK_THROWS_AS(u_spinor(p, Spin::Up, GammaBasis::Chiral, Normalization::MassDim, Route::Boost), Error);
  const auto u = u_spinor(p, Spin::Up, GammaBasis::Chiral, Normalization::MassDim);
  CHECK(dirac_residual(u) == 0.0);
  CHECK(u.components.norm() > 1.0);
  // ubar u = m = 0
  CHECK(std::abs(dirac_bilinear(u, u)) < 1e-15);
}

TEST_CASE("bilinear across bases is refused") {
  const auto p = FourMomentum::on_shell(1.0, {0.1, 0.2, 0.3});
  CHECK_THROWS_AS(dirac_bilinear(u_spinor(p, Spin::Up, GammaBasis::Chiral), u_spinor(p, Spin::Up, GammaBasis::Standard)),
                  Error);
}

TEST_CASE("v = g5 u in the chiral basis and change_basis relates the two bases") {
  oracle::Gen g(25);
  for (int i = 0; i < 30; ++i) {
    const double m = g.uniform(0.1, 10.0);
    const auto p = FourMomentum::on_shell(m, g.vector(10 * m));
    for (Spin s : {Spin::Up, Spin::Down}) {
      const auto u = u_spinor(p, s);
      CHECK((v_spinor(p, s).components - gamma5() * u.components).norm() < 1e-14 * u.components.norm());
      const Vec4 mapped = change_basis(u.components, GammaBasis::Chiral, GammaBasis::Standard);
      CHECK((mapped - u_spinor(p, s, GammaBasis::Standard).components).norm() < 1e-13 * u.components.norm());
    }
  }
}
