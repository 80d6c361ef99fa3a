#include "sforge/algebra.hpp"

#include <string>

namespace sforge {

namespace {

void require_index(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " index " + std::to_string(value) +
                                                " out of range [" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + "]");
  }
}

const Mat2 kOne = Mat2::identity();
const Mat2 kZero{};

}  // namespace

double metric(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

Mat2 pauli(int i) {
  require_index(i, 1, 3, "Pauli");
  switch (i) {
    case 1:
      return Mat2{0.0, 1.0, 1.0, 0.0};
    case 2:
      return Mat2{0.0, -kI, kI, 0.0};
    default:
      return Mat2{1.0, 0.0, 0.0, -1.0};
  }
}

Mat2 sigma_dot(const std::array<double, 3>& a) {
  // [[a3, a1 - i a2], [a1 + i a2, -a3]]
  return Mat2{a[2], Complex(a[0], -a[1]), Complex(a[0], a[1]), -a[2]};
}

Mat4 gamma(int mu, GammaBasis basis) {
  require_index(mu, 0, 3, "gamma");
  if (basis == GammaBasis::Chiral) {
    if (mu == 0) return blocks(kZero, kOne, kOne, kZero);
    const Mat2 s = pauli(mu);
    return blocks(kZero, -s, s, kZero);
  }
  if (mu == 0) return block_diag(kOne, -kOne);
  const Mat2 s = pauli(mu);
  return blocks(kZero, s, -s, kZero);
}

Mat4 gamma5(GammaBasis basis) {
  return kI * gamma(0, basis) * gamma(1, basis) * gamma(2, basis) * gamma(3, basis);
}

double clifford_residual(GammaBasis basis) {
  const std::array<Mat4, 4> g{gamma(0, basis), gamma(1, basis), gamma(2, basis), gamma(3, basis)};
  return clifford_residual<4>(std::span<const Mat4, 4>(g));
}

Mat8 big_gamma(int mu, GammaBasis basis) {
  const Mat4 g = gamma(mu, basis);
  return blocks(Mat4{}, g, g, Mat4{});
}

Mat8 ell5() {
  const Mat4 g5 = gamma5(GammaBasis::Chiral);
  return block_diag(g5, -g5);
}

Mat4 basis_change_unitary() {
  const double r = 1.0 / std::sqrt(2.0);
  return blocks(r * kOne, r * kOne, r * kOne, -r * kOne);
}

Mat4 change_basis(const Mat4& m, GammaBasis from, GammaBasis to) {
  if (from == to) return m;
  const Mat4 s = basis_change_unitary();
  if (from == GammaBasis::Chiral) return s * m * s.adjoint();
  return s.adjoint() * m * s;
}

Vec4 change_basis(const Vec4& v, GammaBasis from, GammaBasis to) {
  if (from == to) return v;
  const Mat4 s = basis_change_unitary();
  if (from == GammaBasis::Chiral) return s * v;
  return s.adjoint() * v;
}

}  // namespace sforge
