#pragma once

// On-shell four-momenta, spin-1/2 Wigner boosts for the (1/2,0) and (0,1/2)
// representations, helicity 2-spinors and the azimuthal phase matrix Xi.

#include <array>

#include "sforge/algebra.hpp"

namespace sforge {

using Vec3 = std::array<double, 3>;

double norm3(const Vec3& v);

/// On-shell four-momentum with positive energy E = +sqrt(p^2 + m^2).
///
/// The light-cone combinations p^± = E ± pz are evaluated without
/// cancellation, so p^- is exactly zero for a massless momentum along +z.
class FourMomentum {
 public:
  /// Throws Domain for m < 0 and for a massless particle at rest.
  static FourMomentum on_shell(double m, const Vec3& p);

  [[nodiscard]] double mass() const { return m_; }
  [[nodiscard]] double energy() const { return e_; }
  [[nodiscard]] const Vec3& momentum() const { return p_; }
  [[nodiscard]] double px() const { return p_[0]; }
  [[nodiscard]] double py() const { return p_[1]; }
  [[nodiscard]] double pz() const { return p_[2]; }
  /// |p|
  [[nodiscard]] double magnitude() const { return pmag_; }
  [[nodiscard]] double p_plus() const { return p_plus_; }
  [[nodiscard]] double p_minus() const { return p_minus_; }
  /// px + i py
  [[nodiscard]] Complex p_r() const { return {p_[0], p_[1]}; }
  /// px - i py
  [[nodiscard]] Complex p_l() const { return {p_[0], -p_[1]}; }
  /// Azimuth of p; 0 when px = py = 0.
  [[nodiscard]] double azimuth() const;
  /// Polar angle of p; 0 at rest.
  [[nodiscard]] double polar() const;
  /// p/|p|, or +z at rest.
  [[nodiscard]] Vec3 direction() const;
  /// The same particle with spatial momentum reversed.
  [[nodiscard]] FourMomentum reversed() const;

 private:
  FourMomentum(double m, const Vec3& p);

  double m_ = 0.0;
  Vec3 p_{};
  double e_ = 0.0;
  double pmag_ = 0.0;
  double p_plus_ = 0.0;
  double p_minus_ = 0.0;
};

struct BoostParameters {
  double gamma = 1.0;       // cosh(rapidity) = E/m
  double beta_gamma = 0.0;  // sinh(rapidity) = |p|/m
  double rapidity = 0.0;
  Vec3 direction{0.0, 0.0, 1.0};

  [[nodiscard]] double velocity() const { return beta_gamma / gamma; }
};

/// Throws Domain for massless momenta (infinite rapidity).
BoostParameters boost_parameters(const FourMomentum& p);

/// Lambda_R(p <- 0) = exp(+sigma.n phi/2) = (E + m + sigma.p)/sqrt(2m(E+m)).
Mat2 lambda_R(const FourMomentum& p);
/// Lambda_L(p <- 0) = exp(-sigma.n phi/2) = (E + m - sigma.p)/sqrt(2m(E+m)).
Mat2 lambda_L(const FourMomentum& p);

enum class Helicity { Up, Down };

[[nodiscard]] constexpr double helicity_sign(Helicity h) { return h == Helicity::Up ? 1.0 : -1.0; }
[[nodiscard]] constexpr Helicity flip(Helicity h) { return h == Helicity::Up ? Helicity::Down : Helicity::Up; }

/// Eigenvectors of sigma.n, n = (sin t cos f, sin t sin f, cos t):
///   up   = norm e^{i alpha} (cos t/2, sin t/2 e^{i f})
///   down = norm e^{i beta}  (sin t/2, -cos t/2 e^{i f})
Vec2 xi_helicity(double theta, double phi, Helicity h, double alpha = 0.0, double beta = 0.0,
                 double norm = 1.0);

/// The unitary U with xi_down = U xi_up for the parametrisation above:
/// e^{i(beta-alpha)} [[0, e^{-i phi}], [-e^{i phi}, 0]].
Mat2 helicity_flip_unitary(double phi, double alpha, double beta);

/// Xi = diag(e^{i phi}, e^{-i phi}); Xi Lambda Xi^{-1} = Lambda* for p with azimuth phi.
Mat2 xi_matrix(double phi);

/// Wigner matrix Theta = -i sigma_2 = [[0, -1], [1, 0]].
Mat2 wigner_theta();

}  // namespace sforge
