#pragma once

// Dirac u/v spinors of the (1/2,0)+(0,1/2) representation.
//
// Chiral-basis spinors are u = (phi_R(p), phi_L(p)) with phi_R(0) = +phi_L(0)
// and v = gamma5 u. Standard-basis spinors are the familiar
// sqrt((E+m)/2m) (xi, sigma.p xi/(E+m)) forms. The two are related by
// change_basis, and both routes are available for cross-checking.

#include <optional>

#include "sforge/algebra.hpp"
#include "sforge/kinematics.hpp"

namespace sforge {

enum class DiracKind { U, V };
/// Spin projection at rest: Up = +1/2, Down = -1/2.
using Spin = Helicity;
enum class Normalization {
  UnitNorm,  // ubar u = +1, vbar v = -1
  MassDim,   // ubar u = +m, vbar v = -m
};
/// ClosedForm evaluates printed component formulas; Boost applies Lambda_{R,L} to rest spinors.
enum class Route { ClosedForm, Boost };

struct DiracSpinor {
  Vec4 components;
  DiracKind kind = DiracKind::U;
  Spin spin = Spin::Up;
  FourMomentum momentum;
  GammaBasis basis = GammaBasis::Chiral;
  Normalization norm = Normalization::UnitNorm;
};

DiracSpinor u_spinor(const FourMomentum& p, Spin spin, GammaBasis basis = GammaBasis::Chiral,
                     Normalization norm = Normalization::UnitNorm, Route route = Route::ClosedForm);
DiracSpinor v_spinor(const FourMomentum& p, Spin spin, GammaBasis basis = GammaBasis::Chiral,
                     Normalization norm = Normalization::UnitNorm, Route route = Route::ClosedForm);

/// gamma^mu p_mu = E gamma^0 - p . gamma.
Mat4 slash(const FourMomentum& p, GammaBasis basis = GammaBasis::Chiral);

/// |(gamma.p - m) u| for u-kind, |(gamma.p + m) v| for v-kind.
double dirac_residual(const DiracSpinor& s);

/// Dirac-conjugate product abar b = a† gamma^0 b.
Complex dirac_bilinear(const Vec4& a, const Vec4& b, GammaBasis basis = GammaBasis::Chiral);
/// Throws InvalidArgument on a basis mismatch.
Complex dirac_bilinear(const DiracSpinor& a, const DiracSpinor& b);

/// Momentum-space parity: psi(p) -> gamma^0 psi(-p). The result carries the
/// reversed momentum, so P u(-p) is compared against u(p).
template <typename SpinorT>
SpinorT parity_apply(const SpinorT& s) {
  SpinorT r = s;
  r.components = gamma(0, s.basis) * s.components;
  r.momentum = s.momentum.reversed();
  return r;
}

enum class ChargeSign { Plus, Minus };

/// phi_R(0) = +phi_L(0) or -phi_L(0) within tol (relative to the spinor size);
/// nullopt when neither holds. Throws InvalidArgument on zero input.
std::optional<ChargeSign> charge_rest_check(const Vec2& phi_r0, const Vec2& phi_l0, double tol = 1e-12);

}  // namespace sforge
