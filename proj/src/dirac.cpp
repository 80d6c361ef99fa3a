#include "sforge/dirac.hpp"

#include <cmath>

namespace sforge {

namespace {

Vec2 rest_spinor(Spin s) { return s == Spin::Up ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0}; }

double normalization_scale(const FourMomentum& p, Normalization norm) {
  if (norm == Normalization::UnitNorm) {
    if (p.mass() == 0.0) throw Error(ErrorCode::Domain, "unit normalisation divides by m; massless spinor needs MassDim");
    return 1.0;
  }
  return std::sqrt(p.mass());
}

// sqrt((E+m)/2m) (xi, sigma.p xi/(E+m)) times the convention scale, written so
// that the MassDim form stays finite at m = 0.
Vec4 standard_u(const FourMomentum& p, Spin spin, Normalization norm) {
  const double ep = p.energy() + p.mass();
  const double lead = norm == Normalization::MassDim ? std::sqrt(ep / 2.0)
                                                     : std::sqrt(ep / (2.0 * p.mass()));
  const double pz = p.pz();
  if (spin == Spin::Up) return lead * Vec4{1.0, 0.0, pz / ep, p.p_r() / ep};
  return lead * Vec4{0.0, 1.0, p.p_l() / ep, -pz / ep};
}

Vec4 standard_v(const FourMomentum& p, Spin spin, Normalization norm) {
  const double ep = p.energy() + p.mass();
  const double lead = norm == Normalization::MassDim ? std::sqrt(ep / 2.0)
                                                     : std::sqrt(ep / (2.0 * p.mass()));
  const double pz = p.pz();
  if (spin == Spin::Up) return lead * Vec4{pz / ep, p.p_r() / ep, 1.0, 0.0};
  return lead * Vec4{p.p_l() / ep, -pz / ep, 0.0, 1.0};
}

// (Lambda_R phi, Lambda_L phi) with phi_R(0) = phi_L(0) = scale * e_spin / sqrt2.
Vec4 boosted_chiral_u(const FourMomentum& p, Spin spin, Normalization norm) {
  if (p.mass() == 0.0) throw Error(ErrorCode::Domain, "boost route needs m > 0");
  const Vec2 phi0 = (normalization_scale(p, norm) / std::sqrt(2.0)) * rest_spinor(spin);
  return stack(lambda_R(p) * phi0, lambda_L(p) * phi0);
}

}  // namespace

DiracSpinor u_spinor(const FourMomentum& p, Spin spin, GammaBasis basis, Normalization norm, Route route) {
  normalization_scale(p, norm);
  Vec4 c;
  if (route == Route::ClosedForm) {
    c = change_basis(standard_u(p, spin, norm), GammaBasis::Standard, basis);
  } else {
    c = change_basis(boosted_chiral_u(p, spin, norm), GammaBasis::Chiral, basis);
  }
  return DiracSpinor{c, DiracKind::U, spin, p, basis, norm};
}

DiracSpinor v_spinor(const FourMomentum& p, Spin spin, GammaBasis basis, Normalization norm, Route route) {
  normalization_scale(p, norm);
  Vec4 c;
  if (route == Route::ClosedForm) {
    c = change_basis(standard_v(p, spin, norm), GammaBasis::Standard, basis);
  } else {
    c = change_basis(gamma5(GammaBasis::Chiral) * boosted_chiral_u(p, spin, norm), GammaBasis::Chiral, basis);
  }
  return DiracSpinor{c, DiracKind::V, spin, p, basis, norm};
}

Mat4 slash(const FourMomentum& p, GammaBasis basis) {
  Mat4 r = p.energy() * gamma(0, basis);
  for (int i = 1; i <= 3; ++i) r -= p.momentum()[i - 1] * gamma(i, basis);
  return r;
}

double dirac_residual(const DiracSpinor& s) {
  const double sign = s.kind == DiracKind::U ? -1.0 : 1.0;
  const Mat4 op = slash(s.momentum, s.basis) + (sign * s.momentum.mass()) * Mat4::identity();
  return (op * s.components).norm();
}

Complex dirac_bilinear(const Vec4& a, const Vec4& b, GammaBasis basis) {
  return inner(a, gamma(0, basis) * b);
}

Complex dirac_bilinear(const DiracSpinor& a, const DiracSpinor& b) {
  if (a.basis != b.basis) throw Error(ErrorCode::InvalidArgument, "Dirac bilinear of spinors in different bases");
  return dirac_bilinear(a.components, b.components, a.basis);
}

std::optional<ChargeSign> charge_rest_check(const Vec2& phi_r0, const Vec2& phi_l0, double tol) {
  const double scale = std::max(phi_r0.norm(), phi_l0.norm());
  if (phi_r0.norm() == 0.0 || phi_l0.norm() == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "rest 2-spinors must be non-zero");
  }
  if ((phi_r0 - phi_l0).norm() <= tol * scale) return ChargeSign::Plus;
  if ((phi_r0 + phi_l0).norm() <= tol * scale) return ChargeSign::Minus;
  return std::nullopt;
}

}  // namespace sforge
