#pragma once

// Independent reference implementations for the tests. Everything here is
// built from Eigen matrices typed in literally, matrix exponentials by Taylor
// series and the defining relations, never from the library's closed forms.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "sforge/algebra.hpp"

namespace oracle {

using cd = std::complex<double>;
using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;
using V2 = Eigen::Vector2cd;
using V4 = Eigen::Vector4cd;
inline const cd I{0.0, 1.0};

inline M2 sigma(int i) {
  M2 s;
  if (i == 1) s << 0, 1, 1, 0;
  if (i == 2) s << 0, -I, I, 0;
  if (i == 3) s << 1, 0, 0, -1;
  return s;
}

inline M2 sigma_dot(const std::array<double, 3>& a) { return a[0] * sigma(1) + a[1] * sigma(2) + a[2] * sigma(3); }

inline M4 block(const M2& a, const M2& b, const M2& c, const M2& d) {
  M4 m;
  m << a, b, c, d;
  return m;
}

// Chiral basis: g0 = [[0,1],[1,0]], gi = [[0,-s],[s,0]].
inline M4 gamma_chiral(int mu) {
  const M2 one = M2::Identity();
  const M2 zero = M2::Zero();
  if (mu == 0) return block(zero, one, one, zero);
  return block(zero, -sigma(mu), sigma(mu), zero);
}

// Standard basis: g0 = diag(1,-1), gi = [[0,s],[-s,0]].
inline M4 gamma_standard(int mu) {
  const M2 one = M2::Identity();
  const M2 zero = M2::Zero();
  if (mu == 0) return block(one, zero, zero, -one);
  return block(zero, sigma(mu), -sigma(mu), zero);
}

inline M4 gamma5_chiral() { return I * gamma_chiral(0) * gamma_chiral(1) * gamma_chiral(2) * gamma_chiral(3); }

inline M4 slash_chiral(double e, const std::array<double, 3>& p) {
  return e * gamma_chiral(0) - p[0] * gamma_chiral(1) - p[1] * gamma_chiral(2) - p[2] * gamma_chiral(3);
}

/// exp(A) by scaling and squaring with a Taylor series.
template <typename M>
M expm(const M& a) {
  const double n = a.cwiseAbs().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (n * scale > 0.25) {
    scale *= 0.5;
    ++squarings;
  }
  const M x = a * scale;
  M term = M::Identity(a.rows(), a.cols());
  M sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

struct Kin {
  double m;
  std::array<double, 3> p;
  double e;
  double pmag;
};

inline Kin kin(double m, const std::array<double, 3>& p) {
  const double pm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  return {m, p, std::sqrt(pm * pm + m * m), pm};
}

/// exp(±sigma.n phi/2) with phi = asinh(|p|/m).
inline M2 boost(const Kin& k, double sign) {
  if (k.pmag == 0.0) return M2::Identity();
  const double phi = std::asinh(k.pmag / k.m);
  const std::array<double, 3> n{k.p[0] / k.pmag, k.p[1] / k.pmag, k.p[2] / k.pmag};
  return expm<M2>(sign * phi / 2.0 * sigma_dot(n));
}

inline V2 rest(int eta) { return eta == 0 ? V2(1.0, 0.0) : V2(0.0, 1.0); }

inline M2 theta_wigner() {
  M2 t;
  t << 0, -1, 1, 0;
  return t;
}

/// lambda^{S,A} from phi_L = Lambda_L sqrt(m/2) e_eta; cls_sign +1 for S.
inline V4 lambda(double cls_sign, int eta, const Kin& k) {
  const V2 phi = boost(k, -1.0) * (std::sqrt(k.m / 2.0) * rest(eta));
  V4 out;
  out << cls_sign * I * theta_wigner() * phi.conjugate(), phi;
  return out;
}

inline V4 rho(double cls_sign, int eta, const Kin& k) {
  const V2 phi = boost(k, +1.0) * (std::sqrt(k.m / 2.0) * rest(eta));
  V4 out;
  out << phi, -cls_sign * I * theta_wigner() * phi.conjugate();
  return out;
}

/// C psi = -g2 psi* (chiral, theta = 0).
inline V4 charge_conj(const V4& v) { return -gamma_chiral(2) * v.conjugate(); }

/// sqrt((E+m)/2m) (xi, sigma.p xi/(E+m)); v swaps the halves (v = g5 u in this basis).
inline V4 u_standard(const Kin& k, int spin) {
  const V2 xi = rest(spin);
  V4 out;
  out << xi, sigma_dot(k.p) * xi / (k.e + k.m);
  return std::sqrt((k.e + k.m) / (2.0 * k.m)) * out;
}

inline V4 v_standard(const Kin& k, int spin) {
  const V4 u = u_standard(k, spin);
  V4 out;
  out << u.tail<2>(), u.head<2>();
  return out;
}

inline cd bar(const V4& a, const V4& b, const M4& g0) { return (a.adjoint() * g0 * b)(0, 0); }

template <std::size_t N>
Eigen::Matrix<cd, static_cast<int>(N), 1> to_eigen(const sforge::Vector<N>& v) {
  Eigen::Matrix<cd, static_cast<int>(N), 1> out;
  for (std::size_t i = 0; i < N; ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

template <std::size_t N>
Eigen::Matrix<cd, static_cast<int>(N), static_cast<int>(N)> to_eigen(const sforge::Matrix<N>& m) {
  Eigen::Matrix<cd, static_cast<int>(N), static_cast<int>(N)> out;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
  return out;
}

/// Hand-rolled generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::array<double, 3> direction() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double s = std::sqrt(1.0 - z * z);
    return {s * std::cos(phi), s * std::sin(phi), z};
  }
  std::array<double, 3> vector(double max_len) {
    const auto d = direction();
    const double r = uniform(0.0, max_len);
    return {r * d[0], r * d[1], r * d[2]};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
