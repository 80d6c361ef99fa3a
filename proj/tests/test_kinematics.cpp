#include <doctest.h>

#include "oracle.hpp"
#include "sforge/kinematics.hpp"

using namespace sforge;

namespace {

double diff(const Mat2& a, const oracle::M2& b) { return (oracle::to_eigen(a) - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("on-shell construction and validation") {
  const auto p = FourMomentum::on_shell(3.0, {0.0, 0.0, 4.0});
  CHECK(p.energy() == 5.0);
  CHECK(p.magnitude() == 4.0);
  CHECK(p.p_plus() == 9.0);
  CHECK(p.p_minus() == 1.0);
  CHECK(p.p_r() == Complex{0.0, 0.0});
  CHECK_THROWS_AS(FourMomentum::on_shell(-1.0, {0, 0, 1}), Error);
  CHECK_THROWS_AS(FourMomentum::on_shell(0.0, {0, 0, 0}), Error);
  CHECK_THROWS_AS(FourMomentum::on_shell(std::nan(""), {0, 0, 1}), Error);
  const auto q = FourMomentum::on_shell(1.0, {1.0, -2.0, 0.5});
  CHECK(q.p_r() == Complex{1.0, -2.0});
  CHECK(q.p_l() == Complex{1.0, 2.0});
  CHECK(q.reversed().pz() == -0.5);
  CHECK(q.reversed().energy() == q.energy());
}

TEST_CASE("light-cone components are free of cancellation") {
  const auto massless = FourMomentum::on_shell(0.0, {0.0, 0.0, 7.0});
  CHECK(massless.p_minus() == 0.0);
  CHECK(massless.p_plus() == 14.0);
  const auto light = FourMomentum::on_shell(1e-9, {0.0, 0.0, 1e3});
  // E - pz = m^2 / (E + pz)
  CHECK(light.p_minus() == doctest::Approx(1e-18 / 2e3).epsilon(1e-12));
  const auto back = FourMomentum::on_shell(1e-9, {0.0, 0.0, -1e3});
  CHECK(back.p_plus() == doctest::Approx(1e-18 / 2e3).epsilon(1e-12));
}

TEST_CASE("property: p+ p- - |p_perp|^2 = m^2") {
  oracle::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const double m = g.uniform(0.1, 10.0);
    const auto p = FourMomentum::on_shell(m, g.vector(10 * m));
    const double lhs = p.p_plus() * p.p_minus() - std::norm(p.p_r());
    CHECK(std::abs(lhs - m * m) < 1e-12 * p.energy() * p.energy());
  }
}

TEST_CASE("boosts equal exp(±sigma.n phi/2) from the series oracle") {
  oracle::Gen g(3);
  for (int i = 0; i < 100; ++i) {
    const double m = g.uniform(0.1, 10.0);
    const auto v = g.vector(10 * m);
    const auto p = FourMomentum::on_shell(m, v);
    const auto k = oracle::kin(m, v);
    const double scale = p.energy() / m;
    CHECK(diff(lambda_R(p), oracle::boost(k, +1.0)) < 1e-12 * scale);
    CHECK(diff(lambda_L(p), oracle::boost(k, -1.0)) < 1e-12 * scale);
    // Lambda_R Lambda_L = 1 (inverse boosts) and det = 1
    CHECK((lambda_R(p) * lambda_L(p) - Mat2::identity()).max_abs() < 1e-12 * scale);
    CHECK(std::abs(lambda_R(p).determinant() - 1.0) < 1e-12 * scale);
  }
  CHECK_THROWS_AS(boost_parameters(FourMomentum::on_shell(0.0, {0, 0, 1})), Error);
  const auto bp = boost_parameters(FourMomentum::on_shell(2.0, {0.0, 1.5, 0.0}));
  CHECK(bp.gamma == doctest::Approx(1.25));
  CHECK(bp.velocity() == doctest::Approx(0.6));
  CHECK(bp.rapidity == doctest::Approx(std::atanh(0.6)));
}

TEST_CASE("helicity spinors are eigenvectors of sigma.n") {
  oracle::Gen g(5);
  for (int i = 0; i < 100; ++i) {
    const double theta = g.uniform(0.0, M_PI);
    const double phi = g.uniform(0.0, 2 * M_PI);
    const Vec3 n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
    const double a = g.uniform(-3, 3);
    const double b = g.uniform(-3, 3);
    const Vec2 up = xi_helicity(theta, phi, Helicity::Up, a, b);
    const Vec2 down = xi_helicity(theta, phi, Helicity::Down, a, b);
    CHECK((sigma_dot(n) * up - up).norm() < 1e-14);
    CHECK((sigma_dot(n) * down + down).norm() < 1e-14);
    CHECK((helicity_flip_unitary(phi, a, b) * up - down).norm() < 1e-14);
    CHECK(unitarity_residual(helicity_flip_unitary(phi, a, b)) < 1e-14);
  }
}

TEST_CASE("Xi conjugates boosts into their complex conjugates at the momentum azimuth") {
  oracle::Gen g(9);
  for (int i = 0; i < 50; ++i) {
    const auto p = FourMomentum::on_shell(g.uniform(0.1, 5.0), g.vector(10.0));
    const Mat2 xi = xi_matrix(p.azimuth());
    CHECK((xi * lambda_L(p) * xi.inverse() - lambda_L(p).conj()).max_abs() < 1e-12 * p.energy() / p.mass());
  }
  CHECK((wigner_theta() * wigner_theta() + Mat2::identity()).max_abs() == 0.0);
  // Theta sigma Theta^-1 = -sigma*
  for (int k = 1; k <= 3; ++k) {
    CHECK((wigner_theta() * pauli(k) * wigner_theta().inverse() + pauli(k).conj()).max_abs() < 1e-15);
  }
}

TEST_CASE("angles") {
  const auto p = FourMomentum::on_shell(1.0, {0.0, 1.0, 0.0});
  CHECK(p.azimuth() == doctest::Approx(M_PI / 2));
  CHECK(p.polar() == doctest::Approx(M_PI / 2));
  const auto rest = FourMomentum::on_shell(1.0, {0.0, 0.0, 0.0});
  CHECK(rest.azimuth() == 0.0);
  CHECK(rest.polar() == 0.0);
  CHECK(rest.direction()[2] == 1.0);
  CHECK(helicity_sign(Helicity::Down) == -1.0);
  CHECK(flip(Helicity::Up) == Helicity::Down);
}
