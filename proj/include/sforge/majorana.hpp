#pragma once

// Self/anti-self charge-conjugate spinors lambda^{S,A} and rho^{S,A} in the
// momentum representation (chiral basis, mass-dimension normalisation):
//
//   lambda^{S,A}(p) = ( ±i Theta phi_L*(p), phi_L(p) )
//   rho^{S,A}(p)    = ( phi_R(p), ∓i Theta phi_R*(p) )
//
// with C = e^{i theta} (-gamma^2) K the antilinear charge conjugation.
// The up/down label is the chiral-helicity index of the rest-frame table
// (phi(0) proportional to (1,0) or (0,1)); it is carried as metadata only.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "sforge/algebra.hpp"
#include "sforge/dirac.hpp"
#include "sforge/kinematics.hpp"
#include "sforge/report.hpp"

namespace sforge {

enum class Family { Lambda, Rho };
enum class ConjClass { S, A };

struct MajoranaLabel {
  Family family = Family::Lambda;
  ConjClass cls = ConjClass::S;
  Helicity eta = Helicity::Up;

  friend bool operator==(const MajoranaLabel&, const MajoranaLabel&) = default;
};

/// Canonical order: lambda^S_up, lambda^S_down, lambda^A_up, lambda^A_down, then the same for rho.
inline constexpr std::array<MajoranaLabel, 8> kMajoranaOrder{{
    {Family::Lambda, ConjClass::S, Helicity::Up},
    {Family::Lambda, ConjClass::S, Helicity::Down},
    {Family::Lambda, ConjClass::A, Helicity::Up},
    {Family::Lambda, ConjClass::A, Helicity::Down},
    {Family::Rho, ConjClass::S, Helicity::Up},
    {Family::Rho, ConjClass::S, Helicity::Down},
    {Family::Rho, ConjClass::A, Helicity::Up},
    {Family::Rho, ConjClass::A, Helicity::Down},
}};

std::size_t majorana_index(const MajoranaLabel& label);
std::string label_name(const MajoranaLabel& label);

struct MajoranaSpinor {
  Vec4 components;
  Family family = Family::Lambda;
  ConjClass cls = ConjClass::S;
  Helicity eta = Helicity::Up;
  FourMomentum momentum;
  GammaBasis basis = GammaBasis::Chiral;

  [[nodiscard]] MajoranaLabel label() const { return {family, cls, eta}; }
};

/// Matrix part of C: e^{i theta} antidiag(-i, i, i, -i) = -e^{i theta} gamma^2 (chiral).
Mat4 charge_conjugation_matrix(double theta = 0.0);
/// C v = M v*. Chiral-basis components.
Vec4 charge_conjugate(const Vec4& v, double theta = 0.0);

/// (E + m - sigma.p) chi / (2 sqrt(E+m)), i.e. Lambda_L(p) sqrt(m/2) chi, finite at m = 0.
Vec2 boosted_left(const FourMomentum& p, const Vec2& chi);
/// (E + m + sigma.p) chi / (2 sqrt(E+m)).
Vec2 boosted_right(const FourMomentum& p, const Vec2& chi);

Vec4 lambda_from_left(ConjClass cls, const Vec2& phi_l);
Vec4 rho_from_right(ConjClass cls, const Vec2& phi_r);

/// ClosedForm evaluates the tabulated component formulas (valid for m >= 0).
/// Boost applies Lambda_{L,R}(p) to the rest spinors sqrt(m/2)(1,0) / (0,1) (m > 0).
MajoranaSpinor majorana_spinor(const FourMomentum& p, const MajoranaLabel& label, Route route = Route::ClosedForm);
MajoranaSpinor lambda_spinor(const FourMomentum& p, ConjClass cls, Helicity eta, Route route = Route::ClosedForm);
MajoranaSpinor rho_spinor(const FourMomentum& p, ConjClass cls, Helicity eta, Route route = Route::ClosedForm);
/// All eight spinors in kMajoranaOrder.
std::array<MajoranaSpinor, 8> majorana_set(const FourMomentum& p, Route route = Route::ClosedForm);

/// lambda^{S,A} built from an arbitrary rest left 2-spinor chi (mass dimension: phi_L(0) = sqrt(m/2) chi).
MajoranaSpinor lambda_from_rest(const FourMomentum& p, ConjClass cls, Helicity eta_label, const Vec2& chi);

/// |C psi - psi| for class S, |C psi + psi| for class A.
double selfconj_residual(const MajoranaSpinor& s, double theta = 0.0);

using BilinearTable = std::array<std::array<Complex, 8>, 8>;

/// Entry (i, j) = psibar_i psi_j over kMajoranaOrder.
BilinearTable biorthonormal_table(const FourMomentum& p);

/// Expected table: the tabulated ±im within-family pattern (zero elsewhere in
/// each family), and the lambda-rho cross entries implied by the rho<->lambda relations.
BilinearTable expected_biorthonormal_table(double m);

/// True for the eight within-family entries that carry a tabulated ±im value.
bool is_tabulated_entry(std::size_t i, std::size_t j);

/// Parity maps P lambda^{S,A} = rho^{A,S}, P rho^{S,A} = lambda^{A,S}; searches the
/// eta label of the image and reports the discovered pairing in the check id.
VerificationReport parity_map_check(const FourMomentum& p, double tol = 1e-12);

/// rho^S_up = -i lambda^A_down, rho^S_down = +i lambda^A_up,
/// rho^A_up = +i lambda^S_down, rho^A_down = -i lambda^S_up.
VerificationReport rho_lambda_relation_check(const FourMomentum& p, double tol = 1e-12);

/// The coefficient matrix taking (u_+, u_-, v_+, v_-) to (lambda^S_up, lambda^S_down, lambda^A_up, lambda^A_down).
Mat4 connection_matrix();
VerificationReport dirac_to_majorana(const FourMomentum& p, double tol = 1e-12);

/// lambda' = (cos a - i g5 sin a) lambda, rho' = (cos a + i g5 sin a) rho.
MajoranaSpinor gauge_transform(const MajoranaSpinor& s, double alpha);
VerificationReport gauge_check(const FourMomentum& p, double alpha, double tol = 1e-12);

enum class XiVariant { I, II, III, IV };

/// diag(Xi, Xi), diag(iXi, -iXi), offdiag(iXi, iXi), [[0, Xi], [-Xi, 0]].
Mat4 xi_block_matrix(XiVariant which, double phi);
/// Applies the block matrix for the momentum azimuth to a lambda^S spinor.
/// The result is lambda-family, class S (its printed identification is self-conjugate).
MajoranaSpinor xi_transform(const MajoranaSpinor& lambda_s, XiVariant which);
/// Right-hand sides lambda_A*, -i lambda_S*, i g0 lambda_A*, g0 lambda_S*.
Vec4 xi_identification(XiVariant which, const Vec4& lambda_s, const Vec4& lambda_a);
VerificationReport xi_identity_check(const FourMomentum& p, double tol = 1e-12);

/// |lambda(p; m)| / sqrt(E) along a fixed direction and |p| for each mass,
/// with phi_L(0) taken as helicity eigenspinors of sigma.n (up: +1, down: -1).
std::vector<double> massless_limit_norm(ConjClass cls, Helicity eta, const Vec3& direction, double pmag,
                                        std::span<const double> masses);

/// lambdabar^S_up lambda^S_down with phi_L(0) = N e^{i theta1}(1,0) and N e^{i theta2}(0,1).
Complex phased_bilinear(const FourMomentum& p, double theta1, double theta2, double n);

}  // namespace sforge
