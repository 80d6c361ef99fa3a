#include "sforge/kinematics.hpp"

#include <cmath>
#include <string>

namespace sforge {

double norm3(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }

FourMomentum::FourMomentum(double m, const Vec3& p) : m_(m), p_(p) {
  pmag_ = norm3(p_);
  e_ = std::hypot(pmag_, m_);
  const double transverse2 = p_[0] * p_[0] + p_[1] * p_[1];
  const double small = m_ * m_ + transverse2;
  if (p_[2] >= 0.0) {
    p_plus_ = e_ + p_[2];
    p_minus_ = small / p_plus_;
  } else {
    p_minus_ = e_ - p_[2];
    p_plus_ = small / p_minus_;
  }
}

FourMomentum FourMomentum::on_shell(double m, const Vec3& p) {
  if (!(m >= 0.0) || !std::isfinite(m)) {
    throw Error(ErrorCode::Domain, "mass must be finite and non-negative, got " + std::to_string(m));
  }
  for (double c : p) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "momentum components must be finite");
  }
  if (m == 0.0 && p[0] == 0.0 && p[1] == 0.0 && p[2] == 0.0) {
    throw Error(ErrorCode::Domain, "massless particle cannot be at rest");
  }
  return FourMomentum(m, p);
}

double FourMomentum::azimuth() const {
  if (p_[0] == 0.0 && p_[1] == 0.0) return 0.0;
  return std::atan2(p_[1], p_[0]);
}

double FourMomentum::polar() const {
  if (pmag_ == 0.0) return 0.0;
  return std::atan2(std::hypot(p_[0], p_[1]), p_[2]);
}

Vec3 FourMomentum::direction() const {
  if (pmag_ == 0.0) return {0.0, 0.0, 1.0};
  return {p_[0] / pmag_, p_[1] / pmag_, p_[2] / pmag_};
}

FourMomentum FourMomentum::reversed() const { return FourMomentum(m_, {-p_[0], -p_[1], -p_[2]}); }

BoostParameters boost_parameters(const FourMomentum& p) {
  if (p.mass() == 0.0) throw Error(ErrorCode::Domain, "massless momentum has infinite rapidity");
  BoostParameters b;
  b.gamma = p.energy() / p.mass();
  b.beta_gamma = p.magnitude() / p.mass();
  b.rapidity = std::asinh(b.beta_gamma);
  b.direction = p.direction();
  return b;
}

namespace {

Mat2 boost(const FourMomentum& p, double sign) {
  if (p.mass() == 0.0) throw Error(ErrorCode::Domain, "massless momentum has no rest-frame boost");
  const double ep = p.energy() + p.mass();
  const Vec3& q = p.momentum();
  Mat2 r = Mat2::identity() * ep + sign * sigma_dot(q);
  return r * (1.0 / std::sqrt(2.0 * p.mass() * ep));
}

}  // namespace

Mat2 lambda_R(const FourMomentum& p) { return boost(p, +1.0); }
Mat2 lambda_L(const FourMomentum& p) { return boost(p, -1.0); }

Vec2 xi_helicity(double theta, double phi, Helicity h, double alpha, double beta, double norm) {
  if (!(norm > 0.0)) throw Error(ErrorCode::InvalidArgument, "helicity spinor norm must be positive");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex e_phi = std::polar(1.0, phi);
  if (h == Helicity::Up) return norm * std::polar(1.0, alpha) * Vec2{c, s * e_phi};
  return norm * std::polar(1.0, beta) * Vec2{s, -c * e_phi};
}

Mat2 helicity_flip_unitary(double phi, double alpha, double beta) {
  return std::polar(1.0, beta - alpha) * Mat2{0.0, std::polar(1.0, -phi), -std::polar(1.0, phi), 0.0};
}

Mat2 xi_matrix(double phi) { return Mat2::diagonal({std::polar(1.0, phi), std::polar(1.0, -phi)}); }

Mat2 wigner_theta() { return Mat2{0.0, -1.0, 1.0, 0.0}; }

}  // namespace sforge
