#pragma once

// Momentum-space residuals of the coupled lambda/rho equations, the
// helicity / chirality / chiral-helicity operators and the unitary chain
// connecting them, the m1 + m2 gamma5 equation, the two-mass Barut
// equation and the theta-deformed dispersion.

#include <array>
#include <string>
#include <vector>

#include "sforge/algebra.hpp"
#include "sforge/dirac.hpp"
#include "sforge/kinematics.hpp"
#include "sforge/majorana.hpp"
#include "sforge/report.hpp"

namespace sforge {

/// All matrices in the chiral basis.
struct OperatorZoo {
  Mat4 h;       // blockdiag(sigma.n, sigma.n)
  Mat4 chi;     // gamma5
  Mat4 eta_op;  // -gamma5 h
  std::array<Mat4, 3> alpha;
  Mat4 beta;
};

/// Throws InvalidArgument for a zero direction; the direction is normalised.
OperatorZoo operator_zoo(const Vec3& direction);
/// alpha^i = gamma^0 gamma^i = blockdiag(sigma^i, -sigma^i) (chiral).
std::array<Mat4, 3> alpha_matrices();
Mat4 alpha_dot(const Vec3& a);

/// Which plane-wave factor each spinor pair carries.
///   Positive: (lambda^S, rho^A) at e^{-ipx}, (lambda^A, rho^S) at e^{+ipx};
///             all four equations then read gamma.p psi = m partner.
///   Negative: the opposite association; every equation acquires the wrong mass sign.
enum class FrequencyConvention { Positive, Negative };

/// mass sign s in gamma.p psi = s m partner.
double convention_sign(FrequencyConvention c);

struct CoupledResult {
  std::array<double, 4> residuals{};  // lambda^S, rho^A, lambda^A, rho^S equations
  std::array<std::string, 4> pairing;  // e.g. "gamma.p lambda^S_up = m rho^A_up"
};

/// Residuals for the four coupled equations for the pair with chiral-helicity
/// label eta, given the eight spinors (kMajoranaOrder) and the mass used in
/// the equations. The partner's label is searched over both values.
CoupledResult coupled_residual(const std::array<MajoranaSpinor, 8>& set, Helicity eta, double mass,
                               FrequencyConvention convention = FrequencyConvention::Positive);
CoupledResult coupled_residual(const FourMomentum& p, Helicity eta,
                               FrequencyConvention convention = FrequencyConvention::Positive);

enum class ParityClass { Plus, Minus };  // (rho^A, lambda^S) and (rho^S, lambda^A)

struct EightSpinor {
  Vec8 components;
  ParityClass parity_class = ParityClass::Plus;
  FourMomentum momentum;
};

EightSpinor make_eight_spinor(const std::array<MajoranaSpinor, 8>& set, ParityClass cls, Helicity eta);

/// Gamma^mu = [[0, gamma^mu], [gamma^mu, 0]].
Mat8 big_gamma_slash(const FourMomentum& p);

/// Largest of the two 4-component block norms of (Gamma.p - s m) Psi, s from the convention.
double eight_component_residual(const EightSpinor& s, double mass,
                                FrequencyConvention convention = FrequencyConvention::Positive);

struct MarkovResult {
  double first = 0.0;   // |(gamma.p - m) psi1|
  double second = 0.0;  // |(gamma.p + m) psi2|
  double chi_eq = 0.0;  // |gamma.p chi - m eta|, chi = (psi1 + psi2)/sqrt2
  double eta_eq = 0.0;  // |gamma.p eta - m chi|, eta = (psi1 - psi2)/sqrt2
};

/// Both spinors must share a basis and momentum.
MarkovResult markov_pair_residual(const DiracSpinor& psi1, const DiracSpinor& psi2);

/// The 2x2 block sqrt((a+a3)/2a) [[1, a_l/(a+a3)], [-a_r/(a+a3), 1]], unitary, det 1.
/// Throws Singular ("U1 singular direction") for a on the -z axis and InvalidArgument for a = 0.
Mat2 u1_block(const Vec3& a);
/// blockdiag(u1_block, u1_block).
Mat4 u1_matrix(const Vec3& a);
/// Swaps components 2 and 4 (alpha_3 -> gamma5).
Mat4 u2_matrix();
/// Swaps components 2 and 3 (blockdiag(sigma3, sigma3) -> gamma5).
Mat4 u3_matrix();
/// A unitary W with W (alpha.a) W† = alpha_3 |a| for every non-zero a. Uses u1_matrix
/// directly when a3 >= 0 and after the reflection blockdiag(sigma1, sigma1) otherwise.
Mat4 u1_rotated(const Vec3& a);

VerificationReport diagonalize_helicity(const Vec3& direction, double tol = 1e-12);
VerificationReport diagonalize_chiral_helicity(const Vec3& direction, double tol = 1e-12);

/// sqrt(m1^2 - m2^2). Throws Domain when m2^2 > m1^2 or a mass is negative.
double generalized_mass_shell(double m1, double m2);
/// gamma.p - m1 - m2 gamma5 (chiral).
Mat4 generalized_mass_operator(const FourMomentum& p, double m1, double m2);
/// Unit kernel vector of the operator at the on-shell momentum with spatial part p3.
/// Of the (two-dimensional) kernel the vector with the largest right-chiral weight is returned.
Vec4 generalized_mass_kernel(const Vec3& p3, double m1, double m2);
/// |(gamma.p - m1 - m2 gamma5) psi| for the unit kernel vector psi.
double generalized_mass_residual(const Vec3& p3, double m1, double m2);

/// For m1 = m2 > 0: the kernel solution is not an eta eigenstate (fit ratio >= 0.01).
/// Control: a massless u spinor along the momentum is one (ratio <= tol).
VerificationReport not_chiral_eigenstate_check(const Vec3& p3, double m1, double m2, double tol = 1e-12);

/// Non-negative roots of  ±mu + alpha mu^2/m - beta = 0  over both signs, ascending,
/// deduplicated at 1e-10 (relative). alpha = 0 gives the single mass |beta|.
/// Throws Domain when m <= 0 or no real non-negative root exists.
std::vector<double> barut_masses(double alpha, double beta, double m);
/// Relative dispersion residual, minimised over the two signs.
double barut_residual(double mu, double alpha, double beta, double m);

using ThetaVector = Vec3;

/// Closed form, ascending: p^2 + m^2 - |theta| (twice), p^2 + m^2 + |theta| (twice).
std::array<double, 4> noncommutative_spectrum(const Vec3& p, double m, const ThetaVector& theta);
/// Eigenvalues of (p^2 + m^2) 1 + alpha.theta by a Hermitian eigensolver, ascending.
std::array<double, 4> noncommutative_spectrum_numeric(const Vec3& p, double m, const ThetaVector& theta);
/// Closed form against the eigensolver, and the chain W(alpha.theta)W† = alpha_3|theta|, U2 alpha_3 U2† = gamma5.
VerificationReport noncommutative_check(const Vec3& p, double m, const ThetaVector& theta, double tol = 1e-12);

/// Ascending eigenvalues of a Hermitian 4x4 matrix.
std::array<double, 4> hermitian_eigenvalues(const Mat4& a);

}  // namespace sforge
