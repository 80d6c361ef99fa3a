#include "sforge/equations.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace sforge {

namespace {

Eigen::Matrix4cd to_eigen(const Mat4& a) {
  Eigen::Matrix4cd e;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a(r, c);
  return e;
}

Vec3 unit(const Vec3& v) {
  const double n = norm3(v);
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorCode::InvalidArgument, "direction must be non-zero and finite");
  return {v[0] / n, v[1] / n, v[2] / n};
}

Mat4 helicity_operator(const Vec3& n) {
  const Mat2 s = sigma_dot(n);
  return block_diag(s, s);
}

std::array<double, 4> spectrum_residuals(const Mat4& a) {
  const auto ev = hermitian_eigenvalues(a);
  return {std::abs(ev[0] + 1.0), std::abs(ev[1] + 1.0), std::abs(ev[2] - 1.0), std::abs(ev[3] - 1.0)};
}

double max_of(const std::array<double, 4>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

std::array<double, 4> hermitian_eigenvalues(const Mat4& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(to_eigen(a), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::Singular, "eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2), ev(3)};
}

std::array<Mat4, 3> alpha_matrices() {
  return {block_diag(pauli(1), -pauli(1)), block_diag(pauli(2), -pauli(2)), block_diag(pauli(3), -pauli(3))};
}

Mat4 alpha_dot(const Vec3& a) {
  const Mat2 s = sigma_dot(a);
  return block_diag(s, -s);
}

OperatorZoo operator_zoo(const Vec3& direction) {
  const Vec3 n = unit(direction);
  OperatorZoo z;
  z.h = helicity_operator(n);
  z.chi = gamma5();
  z.eta_op = -(z.chi * z.h);
  z.alpha = alpha_matrices();
  z.beta = gamma(0);
  return z;
}

double convention_sign(FrequencyConvention c) { return c == FrequencyConvention::Positive ? 1.0 : -1.0; }

namespace {

std::string pair_text(const MajoranaLabel& lhs, const MajoranaLabel& rhs, double sign) {
  return "gamma.p " + label_name(lhs) + (sign > 0 ? " = m " : " = -m ") + label_name(rhs);
}

}  // namespace

CoupledResult coupled_residual(const std::array<MajoranaSpinor, 8>& set, Helicity eta, double mass,
                               FrequencyConvention convention) {
  const Mat4 gp = slash(set[0].momentum);
  const double s = convention_sign(convention);
  const std::array<std::pair<MajoranaLabel, std::pair<Family, ConjClass>>, 4> eqs{{
      {{Family::Lambda, ConjClass::S, eta}, {Family::Rho, ConjClass::A}},
      {{Family::Rho, ConjClass::A, eta}, {Family::Lambda, ConjClass::S}},
      {{Family::Lambda, ConjClass::A, eta}, {Family::Rho, ConjClass::S}},
      {{Family::Rho, ConjClass::S, eta}, {Family::Lambda, ConjClass::A}},
  }};
  CoupledResult out;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& [lhs, partner] = eqs[k];
    const Vec4 applied = gp * set[majorana_index(lhs)].components;
    double best = 0.0;
    MajoranaLabel best_label{};
    bool first = true;
    for (Helicity e : {eta, flip(eta)}) {
      const MajoranaLabel rhs{partner.first, partner.second, e};
      const double r = (applied - (s * mass) * set[majorana_index(rhs)].components).norm();
      if (first || r < best) {
        best = r;
        best_label = rhs;
        first = false;
      }
    }
    out.residuals[k] = best;
    out.pairing[k] = pair_text(lhs, best_label, s);
  }
  return out;
}

CoupledResult coupled_residual(const FourMomentum& p, Helicity eta, FrequencyConvention convention) {
  return coupled_residual(majorana_set(p), eta, p.mass(), convention);
}

EightSpinor make_eight_spinor(const std::array<MajoranaSpinor, 8>& set, ParityClass cls, Helicity eta) {
  const bool plus = cls == ParityClass::Plus;
  const MajoranaLabel top{Family::Rho, plus ? ConjClass::A : ConjClass::S, eta};
  const MajoranaLabel bottom{Family::Lambda, plus ? ConjClass::S : ConjClass::A, eta};
  return EightSpinor{stack(set[majorana_index(top)].components, set[majorana_index(bottom)].components), cls,
                     set[0].momentum};
}

Mat8 big_gamma_slash(const FourMomentum& p) {
  const Mat4 g = slash(p);
  return blocks(Mat4{}, g, g, Mat4{});
}

double eight_component_residual(const EightSpinor& s, double mass, FrequencyConvention convention) {
  const Vec8 r = big_gamma_slash(s.momentum) * s.components - (convention_sign(convention) * mass) * s.components;
  Vec4 top;
  Vec4 bottom;
  for (std::size_t i = 0; i < 4; ++i) {
    top[i] = r[i];
    bottom[i] = r[i + 4];
  }
  return std::max(top.norm(), bottom.norm());
}

MarkovResult markov_pair_residual(const DiracSpinor& psi1, const DiracSpinor& psi2) {
  if (psi1.basis != psi2.basis) throw Error(ErrorCode::InvalidArgument, "spinors in different bases");
  const Mat4 gp = slash(psi1.momentum, psi1.basis);
  const double m = psi1.momentum.mass();
  const double r = 1.0 / std::sqrt(2.0);
  const Vec4 chi = r * (psi1.components + psi2.components);
  const Vec4 eta = r * (psi1.components - psi2.components);
  MarkovResult out;
  out.first = (gp * psi1.components - m * psi1.components).norm();
  out.second = (gp * psi2.components + m * psi2.components).norm();
  out.chi_eq = (gp * chi - m * eta).norm();
  out.eta_eq = (gp * eta - m * chi).norm();
  return out;
}

Mat2 u1_block(const Vec3& a) {
  const double mag = norm3(a);
  if (!(mag > 0.0) || !std::isfinite(mag)) throw Error(ErrorCode::InvalidArgument, "U1 needs a non-zero vector");
  // a + a3, without cancellation near the -z axis.
  const double transverse = a[0] * a[0] + a[1] * a[1];
  const double s = a[2] >= 0.0 ? mag + a[2] : transverse / (mag - a[2]);
  if (s == 0.0) {
    throw Error(ErrorCode::Singular,
                "U1 singular direction: vector on the -z axis; pre-rotate it (e.g. with blockdiag(sigma1, sigma1))");
  }
  const double c = std::sqrt(s / (2.0 * mag));
  const double off = 1.0 / std::sqrt(2.0 * mag * s);
  const Complex al{a[0], -a[1]};
  const Complex ar{a[0], a[1]};
  return Mat2{c, al * off, -ar * off, c};
}

Mat4 u1_matrix(const Vec3& a) {
  const Mat2 u = u1_block(a);
  return block_diag(u, u);
}

Mat4 u2_matrix() {
  return Mat4{1, 0, 0, 0,  //
              0, 0, 0, 1,  //
              0, 0, 1, 0,  //
              0, 1, 0, 0};
}

Mat4 u3_matrix() {
  return Mat4{1, 0, 0, 0,  //
              0, 0, 1, 0,  //
              0, 1, 0, 0,  //
              0, 0, 0, 1};
}

Mat4 u1_rotated(const Vec3& a) {
  if (a[2] >= 0.0) return u1_matrix(a);
  const Mat4 flip_z = block_diag(pauli(1), pauli(1));
  return u1_matrix({a[0], -a[1], -a[2]}) * flip_z;
}

VerificationReport diagonalize_helicity(const Vec3& direction, double tol) {
  VerificationReport report("operator-zoo");
  const OperatorZoo z = operator_zoo(direction);
  const Vec3 n = unit(direction);
  const Mat4 u1 = u1_matrix(n);
  const Mat4 u3 = u3_matrix();
  const Mat4 s3 = block_diag(pauli(3), pauli(3));
  const double structural = std::min(tol, 1e-13);

  report.record("U1 unitary", "U1 U1† = 1", unitarity_residual(u1), structural);
  report.record("|det U1| = 1", "|det U1| = 1", std::abs(std::abs(u1.determinant()) - 1.0), structural);
  report.record("U1 h U1^-1 = blockdiag(s3,s3)", "U1 h U1^-1 = |n| diag(s3, s3)",
                (u1 * z.h * u1.adjoint() - s3).max_abs(), tol);
  report.record("U3 blockdiag(s3,s3) U3^-1 = g5", "U3 diag(s3, s3) U3^-1 = g5",
                (u3 * s3 * u3.adjoint() - z.chi).max_abs(), tol);
  const Mat4 w = u3 * u1;
  report.record("(U3 U1) h (U3 U1)^-1 = g5", "U3 U1 h (U3 U1)^-1 = g5", (w * z.h * w.adjoint() - z.chi).max_abs(),
                tol);
  report.record("det U3 = -1", "det U3 = -1", std::abs(u3.determinant() + 1.0), 0.0);
  report.record("spectrum h", "eig h = {-1,-1,+1,+1}", max_of(spectrum_residuals(z.h)), tol);
  return report;
}

VerificationReport diagonalize_chiral_helicity(const Vec3& direction, double tol) {
  VerificationReport report("operator-zoo");
  const OperatorZoo z = operator_zoo(direction);
  const Vec3 n = unit(direction);
  const Mat4 u1 = u1_matrix(n);
  const Mat4 u2 = u2_matrix();
  const Mat4 an = alpha_dot(n);

  report.record("U1 (alpha.n) U1^-1 = alpha3", "U1 (alpha.n) U1^-1 = alpha3 |n|",
                (u1 * an * u1.adjoint() - z.alpha[2]).max_abs(), tol);
  report.record("U2 alpha3 U2^-1 = g5", "U2 alpha3 U2† = g5", (u2 * z.alpha[2] * u2.adjoint() - z.chi).max_abs(),
                tol);
  report.record("U2 unitary", "U2 U2† = 1", unitarity_residual(u2), 0.0);
  report.record("det U2 = -1", "det U2 = -1", std::abs(u2.determinant() + 1.0), 0.0);
  report.record("eta = -alpha.n", "eta = -g5 h = -alpha.n", (z.eta_op + an).max_abs(), tol);
  report.record("eta involution", "eta^2 = 1", (z.eta_op * z.eta_op - Mat4::identity()).max_abs(), tol);

  const Mat4 beta = z.beta;
  double alg = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    alg = std::max(alg, anticommutator(z.alpha[i], beta).max_abs());
    for (std::size_t j = 0; j < 3; ++j) {
      const double delta = i == j ? 2.0 : 0.0;
      alg = std::max(alg, (anticommutator(z.alpha[i], z.alpha[j]) - delta * Mat4::identity()).max_abs());
    }
  }
  alg = std::max(alg, (beta * beta - Mat4::identity()).max_abs());
  report.record("alpha/beta algebra", "{alpha^i, beta} = 0, {alpha^i, alpha^j} = 2 delta, beta^2 = 1", alg, 0.0);

  report.record("spectrum g5", "eig g5 = {-1,-1,+1,+1}", max_of(spectrum_residuals(z.chi)), tol);
  report.record("spectrum eta", "eig eta = {-1,-1,+1,+1}", max_of(spectrum_residuals(z.eta_op)), tol);
  return report;
}

double generalized_mass_shell(double m1, double m2) {
  if (!std::isfinite(m1) || !std::isfinite(m2) || m1 < 0.0 || m2 < 0.0) {
    throw Error(ErrorCode::Domain, "masses must be finite and non-negative");
  }
  if (m2 > m1) throw Error(ErrorCode::Domain, "m2^2 > m1^2 gives a tachyonic shell");
  return std::sqrt((m1 - m2) * (m1 + m2));
}

Mat4 generalized_mass_operator(const FourMomentum& p, double m1, double m2) {
  return slash(p) - m1 * Mat4::identity() - m2 * gamma5();
}

Vec4 generalized_mass_kernel(const Vec3& p3, double m1, double m2) {
  const auto p = FourMomentum::on_shell(generalized_mass_shell(m1, m2), p3);
  const Eigen::Matrix4cd d = to_eigen(generalized_mass_operator(p, m1, m2));
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(d, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-8 * std::max(sv(0), 1e-300);
  Eigen::Index dim = 0;
  for (Eigen::Index i = 0; i < 4; ++i)
    if (sv(i) <= cutoff) ++dim;
  if (dim == 0) throw Error(ErrorCode::Singular, "operator has no kernel at the shell momentum");
  const Eigen::MatrixXcd k = svd.matrixV().rightCols(dim);

  // Right-chiral weight on the kernel: K† P_R K.
  Eigen::MatrixXcd pr = Eigen::MatrixXcd::Zero(4, 4);
  pr(0, 0) = 1.0;
  pr(1, 1) = 1.0;
  const Eigen::MatrixXcd g = k.adjoint() * pr * k;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
  const Eigen::VectorXcd y = es.eigenvectors().col(dim - 1);
  Eigen::VectorXcd psi = k * y;
  psi.normalize();

  // Phase: first component within rounding of the largest magnitude is made real positive.
  double biggest = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) biggest = std::max(biggest, std::abs(psi(i)));
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (std::abs(psi(i)) >= (1.0 - 1e-9) * biggest) {
      psi *= std::conj(psi(i)) / std::abs(psi(i));
      break;
    }
  }
  Vec4 out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = psi(static_cast<Eigen::Index>(i));
  return out;
}

double generalized_mass_residual(const Vec3& p3, double m1, double m2) {
  const auto p = FourMomentum::on_shell(generalized_mass_shell(m1, m2), p3);
  const Vec4 psi = generalized_mass_kernel(p3, m1, m2);
  return (generalized_mass_operator(p, m1, m2) * psi).norm();
}

VerificationReport not_chiral_eigenstate_check(const Vec3& p3, double m1, double m2, double tol) {
  if (!(m1 > 0.0) || m1 != m2) throw Error(ErrorCode::InvalidArgument, "needs the massless configuration m1 = m2 > 0");
  VerificationReport report("gd1");
  const Vec4 psi = generalized_mass_kernel(p3, m1, m2);
  const OperatorZoo z = operator_zoo(p3);
  const double ratio = eigen_fit_ratio(z.eta_op, psi);
  report.record("m1 = m2 kernel is not an eta eigenstate", "min_c |eta psi - c psi| / |psi| > 0.01", ratio, 0.01,
                Bound::AtLeast);
  report.record("fit ratio scale invariant", "ratio(s psi) = ratio(psi)",
                std::abs(eigen_fit_ratio(z.eta_op, Complex{3.7, -1.2} * psi) - ratio), tol);

  const double pmag = norm3(p3);
  const auto pz = FourMomentum::on_shell(0.0, {0.0, 0.0, pmag});
  const auto u = u_spinor(pz, Spin::Up, GammaBasis::Chiral, Normalization::MassDim);
  report.record("massless u along z is an eta eigenstate", "min_c |eta u - c u| / |u| = 0",
                eigen_fit_ratio(operator_zoo({0.0, 0.0, 1.0}).eta_op, u.components), tol);
  return report;
}

std::vector<double> barut_masses(double alpha, double beta, double m) {
  if (!(m > 0.0) || !std::isfinite(m) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw Error(ErrorCode::Domain, "Barut masses need finite alpha, beta and m > 0");
  }
  std::vector<double> roots;
  if (alpha == 0.0) {
    roots.push_back(std::abs(beta));
    return roots;
  }
  const double a = alpha / m;
  const double c = -beta;
  for (double b : {1.0, -1.0}) {
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) continue;
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    for (double r : {q / a, c / q}) {
      if (r >= 0.0) roots.push_back(r == 0.0 ? 0.0 : r);
    }
  }
  if (roots.empty()) throw Error(ErrorCode::Domain, "no real non-negative Barut mass for these parameters");
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || std::abs(r - unique.back()) > 1e-10 * std::max(1.0, std::abs(r))) unique.push_back(r);
  }
  return unique;
}

double barut_residual(double mu, double alpha, double beta, double m) {
  const double quad = alpha * mu * mu / m;
  const double scale = std::max({std::abs(mu), std::abs(quad), std::abs(beta), 1e-300});
  double best = 0.0;
  bool first = true;
  for (double s : {1.0, -1.0}) {
    const double r = std::abs(s * mu + quad - beta) / scale;
    if (first || r < best) best = r;
    first = false;
  }
  return best;
}

std::array<double, 4> noncommutative_spectrum(const Vec3& p, double m, const ThetaVector& theta) {
  const double base = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m;
  const double t = norm3(theta);
  return {base - t, base - t, base + t, base + t};
}

std::array<double, 4> noncommutative_spectrum_numeric(const Vec3& p, double m, const ThetaVector& theta) {
  const double base = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m;
  return hermitian_eigenvalues(base * Mat4::identity() + alpha_dot(theta));
}

VerificationReport noncommutative_check(const Vec3& p, double m, const ThetaVector& theta, double tol) {
  VerificationReport report("noncommutative");
  const auto closed = noncommutative_spectrum(p, m, theta);
  const auto numeric = noncommutative_spectrum_numeric(p, m, theta);
  const double t = norm3(theta);
  const double base = closed[0] + t;
  double diff = 0.0;
  for (std::size_t i = 0; i < 4; ++i) diff = std::max(diff, std::abs(closed[i] - numeric[i]));
  report.record("closed form = eigensolver", "E^2 = p^2 + m^2 ± |theta|", diff, tol * (base + t));

  if (t > 0.0) {
    const Mat4 w = u1_rotated(theta);
    const Mat4 a3 = alpha_matrices()[2];
    report.record("W (alpha.theta) W^-1 = alpha3 |theta|", "U1 (alpha.theta) U1^-1 = alpha3 |theta|",
                  (w * alpha_dot(theta) * w.adjoint() - t * a3).max_abs(), tol * t);
    const Mat4 full = u2_matrix() * w;
    const Mat4 deformed = base * Mat4::identity() + alpha_dot(theta);
    report.record("deformed operator -> p^2 + m^2 + g5 |theta|", "[E^2 - p^2 - m^2 - g5 |theta|] psi' = 0",
                  (full * deformed * full.adjoint() - (base * Mat4::identity() + t * gamma5())).max_abs(),
                  tol * (base + t));
  }
  return report;
}

}  // namespace sforge
