#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "sforge/equations.hpp"

using namespace sforge;

namespace {

double max4(const std::array<double, 4>& a) { return *std::max_element(a.begin(), a.end()); }

}  // namespace

TEST_CASE("coupled equations at rest and at random momenta") {
  const auto rest = FourMomentum::on_shell(1.0, {0, 0, 0});
  for (Helicity eta : {Helicity::Up, Helicity::Down}) {
    const auto r = coupled_residual(rest, eta);
    CHECK(max4(r.residuals) < 1e-13);
  }
  const auto r = coupled_residual(rest, Helicity::Up);
  CHECK(r.pairing[0] == "gamma.p lambda^S_up = m rho^A_up");
  CHECK(r.pairing[2] == "gamma.p lambda^A_up = m rho^S_up");

  oracle::Gen g(41);
  for (int i = 0; i < 100; ++i) {
    const double m = g.uniform(0.1, 10.0);
    const auto pv = g.vector(10 * m);
    const auto p = FourMomentum::on_shell(m, pv);
    const auto k = oracle::kin(m, pv);
    const oracle::M4 gp = oracle::slash_chiral(k.e, pv);
    for (Helicity eta : {Helicity::Up, Helicity::Down}) {
      CHECK(max4(coupled_residual(p, eta).residuals) < 1e-12 * (p.energy() + m));
      // oracle: g.p lambda^S = m rho^A with series-built spinors
      const int e = eta == Helicity::Up ? 0 : 1;
      CHECK((gp * oracle::lambda(1, e, k) - m * oracle::rho(-1, e, k)).norm() < 1e-11 * (p.energy() + m));
      CHECK((gp * oracle::lambda(-1, e, k) - m * oracle::rho(1, e, k)).norm() < 1e-11 * (p.energy() + m));
    }
  }
}

TEST_CASE("negative controls for the coupled equations") {
  const double m = 2.0;
  const auto rest = FourMomentum::on_shell(m, {0, 0, 0});
  const auto set = majorana_set(rest);
  // wrong-sign mass: the closer partner is the opposite eta, |m (psi_up + psi_down)| = m sqrt(2m)
  const auto wrong = coupled_residual(set, Helicity::Up, -m);
  for (double r : wrong.residuals) CHECK(r == doctest::Approx(m * std::sqrt(2 * m)));
  const auto neg = coupled_residual(rest, Helicity::Up, FrequencyConvention::Negative);
  for (double r : neg.residuals) CHECK(r > m);
}

TEST_CASE("eight-component system equals the max of its 4-component parts") {
  oracle::Gen g(42);
  for (int i = 0; i < 50; ++i) {
    const double m = g.uniform(0.1, 10.0);
    const auto p = FourMomentum::on_shell(m, g.vector(10 * m));
    const auto set = majorana_set(p);
    for (Helicity eta : {Helicity::Up, Helicity::Down}) {
      const auto four = coupled_residual(set, eta, m);
      const auto plus = make_eight_spinor(set, ParityClass::Plus, eta);
      const auto minus = make_eight_spinor(set, ParityClass::Minus, eta);
      const double rp = eight_component_residual(plus, m);
      const double rm = eight_component_residual(minus, m);
      CHECK(rp < 1e-12 * (p.energy() + m));
      CHECK(rm < 1e-12 * (p.energy() + m));
      CHECK(std::abs(rp - std::max(four.residuals[0], four.residuals[1])) < 1e-14 * (p.energy() + m));
      CHECK(std::abs(rm - std::max(four.residuals[2], four.residuals[3])) < 1e-14 * (p.energy() + m));
      // opposite sign: (G.p + m) Psi = 2 m Psi
      CHECK(eight_component_residual(plus, m, FrequencyConvention::Negative) ==
            doctest::Approx(2 * m * std::max(upper(plus.components).norm(), lower(plus.components).norm())));
    }
  }
  // Big Gamma slash squares to p^2
  const auto p = FourMomentum::on_shell(1.5, {0.2, 0.4, -0.1});
  const Mat8 s = big_gamma_slash(p);
  CHECK((s * s - 2.25 * Mat8::identity()).max_abs() < 1e-14);
}

TEST_CASE("Markov add/subtract construction") {
  oracle::Gen g(43);
  for (int i = 0; i < 50; ++i) {
    const double m = g.uniform(0.1, 10.0);
    const auto p = FourMomentum::on_shell(m, g.vector(10 * m));
    for (GammaBasis b : {GammaBasis::Chiral, GammaBasis::Standard}) {
      const auto u = u_spinor(p, Spin::Up, b);
      auto partner = u;
      partner.components = gamma5(b) * u.components;
      const auto r = markov_pair_residual(u, partner);
      const double thr = 1e-12 * (p.energy() + m);
      CHECK(r.first < thr);
      CHECK(r.second < thr);
      CHECK(r.chi_eq < thr);
      CHECK(r.eta_eq < thr);
      const auto bad = markov_pair_residual(u, u);
      CHECK(bad.chi_eq >= m * u.components.norm() * (1 - 1e-12));
    }
  }
}

TEST_CASE("U1 diagonalises sigma.a and is unitary") {
  CHECK((u1_matrix({0, 0, 1}) - Mat4::identity()).max_abs() < 1e-16);
  oracle::Gen g(44);
  for (int i = 0; i < 100; ++i) {
    const auto a = g.vector(5.0);
    const double mag = norm3(a);
    const Mat2 u = u1_block(a);
    CHECK(unitarity_residual(u) < 1e-14);
    CHECK(std::abs(u.determinant() - 1.0) < 1e-14);
    CHECK((u * sigma_dot(a) * u.adjoint() - mag * pauli(3)).max_abs() < 1e-13 * mag);
    const Mat4 w = u1_rotated(a);
    CHECK((w * alpha_dot(a) * w.adjoint() - mag * alpha_matrices()[2]).max_abs() < 1e-13 * mag);
  }
  try {
    (void)u1_matrix({0, 0, -2});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Singular);
    CHECK(std::string(e.what()).find("U1 singular direction") != std::string::npos);
  }
  CHECK_THROWS_AS(u1_matrix({0, 0, 0}), Error);
  const Mat4 w = u1_rotated({0, 0, -2});
  CHECK((w * alpha_dot({0, 0, -2}) * w.adjoint() - 2.0 * alpha_matrices()[2]).max_abs() < 1e-15);
  // unnormalised printed form: UU† = (2a/(a+a3)) 1
  const Vec3 a{0.3, -0.4, 0.5};
  const double mag = norm3(a);
  const Mat2 printed = (1.0 / std::sqrt((mag + a[2]) / (2 * mag))) * u1_block(a);
  CHECK((printed * printed.adjoint() - (2 * mag / (mag + a[2])) * Mat2::identity()).max_abs() < 1e-14);
}

TEST_CASE("U2 and U3 are the permutations with det -1") {
  CHECK(u2_matrix().determinant() == Complex{-1.0, 0.0});
  CHECK(u3_matrix().determinant() == Complex{-1.0, 0.0});
  CHECK((u2_matrix() * alpha_matrices()[2] * u2_matrix().adjoint() - gamma5()).max_abs() == 0.0);
  const Mat4 s3 = block_diag(pauli(3), pauli(3));
  CHECK((u3_matrix() * s3 * u3_matrix().adjoint() - gamma5()).max_abs() == 0.0);
}

TEST_CASE("operator zoo: involutions, algebra and equal spectra") {
  oracle::Gen g(45);
  std::vector<Vec3> dirs{{0, 0, 1}, {1, 1, 1}};
  for (int i = 0; i < 50; ++i) dirs.push_back(g.direction());
  for (const auto& d : dirs) {
    const auto z = operator_zoo(d);
    CHECK((z.h * z.h - Mat4::identity()).max_abs() < 1e-14);
    CHECK((z.eta_op * z.eta_op - Mat4::identity()).max_abs() < 1e-14);
    CHECK(diagonalize_helicity(d).all_passed());
    CHECK(diagonalize_chiral_helicity(d).all_passed());
    // oracle: eigenvalues from Eigen directly
    Eigen::SelfAdjointEigenSolver<oracle::M4> es(oracle::to_eigen(z.eta_op));
    CHECK(es.eigenvalues()(0) == doctest::Approx(-1.0));
    CHECK(es.eigenvalues()(3) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(operator_zoo({0, 0, 0}), Error);
  CHECK_THROWS_AS(diagonalize_helicity({0, 0, -1}), Error);
}

TEST_CASE("generalized mass shell and kernel") {
  CHECK(generalized_mass_shell(1.7, 0.0) == 1.7);
  CHECK(generalized_mass_shell(2.3, 2.3) == 0.0);
  CHECK(generalized_mass_shell(2.0, 1.0) == doctest::Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(generalized_mass_shell(1.0, 2.0), Error);
  CHECK_THROWS_AS(generalized_mass_shell(-1.0, 0.0), Error);

  CHECK(generalized_mass_residual({0.3, -0.2, 0.9}, 2.0, 1.0) < 1e-12);
  CHECK(generalized_mass_residual({0, 0, 1}, 1.0, 1.0) < 1e-12);
  // m2 = 0: the kernel lies in the span of u_up, u_down
  const Vec3 pv{0.4, 0.1, -0.3};
  const Vec4 psi = generalized_mass_kernel(pv, 1.5, 0.0);
  const auto p = FourMomentum::on_shell(1.5, pv);
  const Vec4 u1 = u_spinor(p, Spin::Up).components;
  const Vec4 u2 = u_spinor(p, Spin::Down).components;
  // project psi on span{u1, u2} via the Dirac bilinear (ubar_s u_s' = delta)
  const Vec4 proj = dirac_bilinear(u1, psi) * u1 + dirac_bilinear(u2, psi) * u2;
  CHECK((proj - psi).norm() < 1e-12);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-14);

  // oracle: smallest singular value from Eigen's BDCSVD vanishes at the shell
  const Mat4 d = generalized_mass_operator(FourMomentum::on_shell(std::sqrt(3.0), pv), 2.0, 1.0);
  Eigen::BDCSVD<oracle::M4> svd(oracle::to_eigen(d));
  CHECK(svd.singularValues()(3) < 1e-12);
  CHECK(svd.singularValues()(2) < 1e-12);
  CHECK(svd.singularValues()(1) > 1e-3);
}

TEST_CASE("massless gd1 solutions are not chiral-helicity eigenstates") {
  const auto r = not_chiral_eigenstate_check({0, 0, 1}, 1.0, 1.0);
  CHECK(r.all_passed());
  CHECK(r.checks()[0].residual > 0.01);
  CHECK(r.find("massless u along z is an eta eigenstate")->residual < 1e-12);
  oracle::Gen g(46);
  for (int i = 0; i < 30; ++i) {
    const double m = g.uniform(0.1, 5.0);
    CHECK(not_chiral_eigenstate_check(g.vector(5.0), m, m).all_passed());
  }
  CHECK_THROWS_AS(not_chiral_eigenstate_check({0, 0, 1}, 2.0, 1.0), Error);
}

namespace {

// Bisection oracle for the non-negative roots of s mu + a mu^2 - beta.
std::vector<double> bisect_roots(double alpha, double beta, double m) {
  std::vector<double> roots;
  for (double s : {1.0, -1.0}) {
    auto f = [&](double mu) { return s * mu + alpha * mu * mu / m - beta; };
    // vertex splits the half-line into monotone pieces
    const double vertex = -s * m / (2 * alpha);
    std::vector<double> edges{0.0};
    if (vertex > 0) edges.push_back(vertex);
    edges.push_back(1e6);
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
      double lo = edges[k];
      double hi = edges[k + 1];
      if (f(lo) * f(hi) > 0) continue;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(lo) * f(mid) <= 0 ? hi : lo) = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

TEST_CASE("Barut masses") {
  const auto golden = barut_masses(1.0, 1.0, 1.0);
  REQUIRE(golden.size() == 2);
  CHECK(golden[0] == doctest::Approx((std::sqrt(5.0) - 1) / 2));
  CHECK(golden[1] == doctest::Approx((std::sqrt(5.0) + 1) / 2));
  CHECK(barut_masses(0.0, 1.3, 1.0) == std::vector<double>{1.3});
  CHECK(barut_masses(0.0, -1.3, 1.0) == std::vector<double>{1.3});
  CHECK_THROWS_AS(barut_masses(1.0, 1.0, 0.0), Error);
  CHECK_THROWS_AS(barut_masses(1.0, -10.0, 1.0), Error);  // complex roots on both branches

  oracle::Gen g(47);
  for (int i = 0; i < 100; ++i) {
    const double alpha = g.uniform(0.01, 2.0);
    const double beta = g.uniform(0.1, 5.0);
    const double m = g.uniform(0.1, 10.0);
    const auto got = barut_masses(alpha, beta, m);
    const auto want = bisect_roots(alpha, beta, m);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-10));
      CHECK(barut_residual(got[k], alpha, beta, m) < 1e-12);
    }
  }
  // alpha -> 0: one root -> beta, the other runs off as m/alpha
  const auto small = barut_masses(1e-10, 2.0, 1.0);
  CHECK(small.front() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(small.back() > 1e9);
}

TEST_CASE("noncommutative spectrum") {
  const auto s = noncommutative_spectrum({0, 0, 0}, 1.0, {0, 0, 0.1});
  CHECK(s[0] == doctest::Approx(0.9));
  CHECK(s[1] == doctest::Approx(0.9));
  CHECK(s[2] == doctest::Approx(1.1));
  CHECK(s[3] == doctest::Approx(1.1));
  const auto zero = noncommutative_spectrum({0.3, 0.4, 0}, 1.0, {0, 0, 0});
  for (double e2 : zero) CHECK(e2 == doctest::Approx(1.25));

  oracle::Gen g(48);
  for (int i = 0; i < 100; ++i) {
    const double m = g.uniform(0.1, 10.0);
    const auto p = g.vector(10 * m);
    const auto theta = g.vector(m * m);
    const auto closed = noncommutative_spectrum(p, m, theta);
    const auto numeric = noncommutative_spectrum_numeric(p, m, theta);
    const double scale = closed[3];
    for (int k = 0; k < 4; ++k) CHECK(std::abs(closed[k] - numeric[k]) < 1e-12 * scale);
    CHECK(noncommutative_check(p, m, theta).all_passed());
  }
  // theta on the -z axis uses the internal reflection and never throws
  CHECK(noncommutative_check({0, 0, 0}, 1.0, {0, 0, -0.5}).all_passed());
}
