#pragma once

// Fixed-size complex linear algebra (2, 4 and 8 dimensions) and the Dirac
// gamma matrices in the chiral (Weyl) and standard (Dirac) representations.
// Metric signature is (+,-,-,-) throughout.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

#include "sforge/error.hpp"

namespace sforge {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

template <std::size_t N>
class Vector {
  static_assert(N == 2 || N == 4 || N == 8, "only 2, 4 and 8 components are supported");

 public:
  static constexpr std::size_t kSize = N;

  constexpr Vector() = default;
  constexpr Vector(std::initializer_list<Complex> values) {
    std::size_t i = 0;
    for (const auto& v : values) {
      if (i < N) data_[i++] = v;
    }
  }
  explicit constexpr Vector(const std::array<Complex, N>& data) : data_(data) {}

  /// Exact componentwise equality.
  bool operator==(const Vector&) const = default;

  constexpr Complex& operator[](std::size_t i) { return data_[i]; }
  constexpr const Complex& operator[](std::size_t i) const { return data_[i]; }

  [[nodiscard]] std::span<const Complex, N> span() const { return data_; }
  [[nodiscard]] const std::array<Complex, N>& data() const { return data_; }

  Vector& operator+=(const Vector& o) {
    for (std::size_t i = 0; i < N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    for (std::size_t i = 0; i < N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Vector& operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator-(Vector a) { return a *= -1.0; }
  friend Vector operator*(Complex s, Vector a) { return a *= s; }
  friend Vector operator*(Vector a, Complex s) { return a *= s; }

  [[nodiscard]] Vector conj() const {
    Vector r;
    for (std::size_t i = 0; i < N; ++i) r.data_[i] = std::conj(data_[i]);
    return r;
  }

  [[nodiscard]] double norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
  }

  [[nodiscard]] double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, std::abs(x));
    return m;
  }

 private:
  std::array<Complex, N> data_{};
};

/// Hermitian inner product a†b.
template <std::size_t N>
Complex inner(const Vector<N>& a, const Vector<N>& b) {
  Complex s{};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// Square complex matrix, dense row-major.
template <std::size_t N>
class Matrix {
  static_assert(N == 2 || N == 4 || N == 8, "only 2x2, 4x4 and 8x8 matrices are supported");

 public:
  static constexpr std::size_t kSize = N;

  constexpr Matrix() = default;
  /// Row-major initialiser; missing trailing entries stay zero.
  constexpr Matrix(std::initializer_list<Complex> row_major) {
    std::size_t i = 0;
    for (const auto& v : row_major) {
      if (i < N * N) data_[i++] = v;
    }
  }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<Complex, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  bool operator==(const Matrix&) const = default;

  constexpr Complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  [[nodiscard]] std::span<const Complex, N * N> span() const { return data_; }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    }
    return r;
  }

  friend Vector<N> operator*(const Matrix& a, const Vector<N>& v) {
    Vector<N> r;
    for (std::size_t i = 0; i < N; ++i) {
      Complex s{};
      for (std::size_t j = 0; j < N; ++j) s += a(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  [[nodiscard]] Matrix adjoint() const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  [[nodiscard]] Matrix conj() const {
    Matrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.data_[i] = std::conj(data_[i]);
    return r;
  }

  [[nodiscard]] Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entry magnitude; the residual measure used by the identity checks.
  [[nodiscard]] double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, std::abs(x));
    return m;
  }

  /// Determinant by LU with partial pivoting. Exact for permutation matrices.
  [[nodiscard]] Complex determinant() const {
    auto a = data_;
    Complex det = 1.0;
    for (std::size_t col = 0; col < N; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < N; ++r) {
        if (std::abs(a[r * N + col]) > std::abs(a[piv * N + col])) piv = r;
      }
      if (a[piv * N + col] == Complex{}) return 0.0;
      if (piv != col) {
        for (std::size_t c = 0; c < N; ++c) std::swap(a[piv * N + c], a[col * N + c]);
        det = -det;
      }
      const Complex d = a[col * N + col];
      det *= d;
      for (std::size_t r = col + 1; r < N; ++r) {
        const Complex f = a[r * N + col] / d;
        if (f == Complex{}) continue;
        for (std::size_t c = col; c < N; ++c) a[r * N + c] -= f * a[col * N + c];
      }
    }
    return det;
  }

  /// Gauss-Jordan inverse with partial pivoting.
  [[nodiscard]] Matrix inverse() const {
    auto a = data_;
    Matrix inv = identity();
    for (std::size_t col = 0; col < N; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < N; ++r) {
        if (std::abs(a[r * N + col]) > std::abs(a[piv * N + col])) piv = r;
      }
      if (std::abs(a[piv * N + col]) == 0.0) throw Error(ErrorCode::Singular, "matrix is singular");
      if (piv != col) {
        for (std::size_t c = 0; c < N; ++c) {
          std::swap(a[piv * N + c], a[col * N + c]);
          std::swap(inv(piv, c), inv(col, c));
        }
      }
      const Complex d = a[col * N + col];
      for (std::size_t c = 0; c < N; ++c) {
        a[col * N + c] /= d;
        inv(col, c) /= d;
      }
      for (std::size_t r = 0; r < N; ++r) {
        if (r == col) continue;
        const Complex f = a[r * N + col];
        if (f == Complex{}) continue;
        for (std::size_t c = 0; c < N; ++c) {
          a[r * N + c] -= f * a[col * N + c];
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

 private:
  std::array<Complex, N * N> data_{};
};

using Vec2 = Vector<2>;
using Vec4 = Vector<4>;
using Vec8 = Vector<8>;
using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
using Mat8 = Matrix<8>;

/// Assemble a 2N x 2N matrix from four N x N blocks [[a, b], [c, d]].
template <std::size_t N>
Matrix<2 * N> blocks(const Matrix<N>& a, const Matrix<N>& b, const Matrix<N>& c, const Matrix<N>& d) {
  Matrix<2 * N> r;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      r(i, j) = a(i, j);
      r(i, j + N) = b(i, j);
      r(i + N, j) = c(i, j);
      r(i + N, j + N) = d(i, j);
    }
  }
  return r;
}

template <std::size_t N>
Matrix<N> zero_matrix() {
  return Matrix<N>{};
}

template <std::size_t N>
Matrix<2 * N> block_diag(const Matrix<N>& a, const Matrix<N>& d) {
  return blocks(a, zero_matrix<N>(), zero_matrix<N>(), d);
}

template <std::size_t N>
Vector<2 * N> stack(const Vector<N>& top, const Vector<N>& bottom) {
  Vector<2 * N> r;
  for (std::size_t i = 0; i < N; ++i) {
    r[i] = top[i];
    r[i + N] = bottom[i];
  }
  return r;
}

template <std::size_t N>
Vector<N / 2> upper(const Vector<N>& v) {
  Vector<N / 2> r;
  for (std::size_t i = 0; i < N / 2; ++i) r[i] = v[i];
  return r;
}

template <std::size_t N>
Vector<N / 2> lower(const Vector<N>& v) {
  Vector<N / 2> r;
  for (std::size_t i = 0; i < N / 2; ++i) r[i] = v[i + N / 2];
  return r;
}

template <std::size_t N>
Matrix<N> anticommutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b + b * a;
}

template <std::size_t N>
Matrix<N> commutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b - b * a;
}

/// max |UU† - 1|.
template <std::size_t N>
double unitarity_residual(const Matrix<N>& u) {
  return (u * u.adjoint() - Matrix<N>::identity()).max_abs();
}

/// max |A - A†|.
template <std::size_t N>
double hermiticity_residual(const Matrix<N>& a) {
  return (a - a.adjoint()).max_abs();
}

/// Least-squares eigenvalue fit: min over scalars c of |A v - c v| / |v|.
/// Zero iff v is an eigenvector of A; invariant under rescaling of v.
template <std::size_t N>
double eigen_fit_ratio(const Matrix<N>& a, const Vector<N>& v) {
  const double vv = inner(v, v).real();
  if (vv == 0.0) throw Error(ErrorCode::InvalidArgument, "eigen fit of the zero vector");
  const Vector<N> av = a * v;
  const Complex c = inner(v, av) / vv;
  return (av - c * v).norm() / std::sqrt(vv);
}

enum class GammaBasis { Chiral, Standard };

/// Minkowski metric diag(+1, -1, -1, -1).
double metric(int mu, int nu);

/// Pauli matrix sigma^i, i in {1, 2, 3}.
Mat2 pauli(int i);

/// sigma . a for a real 3-vector.
Mat2 sigma_dot(const std::array<double, 3>& a);

Mat4 gamma(int mu, GammaBasis basis = GammaBasis::Chiral);

/// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3. diag(1,1,-1,-1) in the chiral basis.
Mat4 gamma5(GammaBasis basis = GammaBasis::Chiral);

/// max over mu, nu of |{g^mu, g^nu} - 2 g^{mu nu} 1| for an explicit set.
template <std::size_t N>
double clifford_residual(std::span<const Matrix<N>, 4> gammas) {
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      Matrix<N> r = anticommutator(gammas[mu], gammas[nu]) - (2.0 * metric(mu, nu)) * Matrix<N>::identity();
      worst = std::max(worst, r.max_abs());
    }
  }
  return worst;
}

double clifford_residual(GammaBasis basis);

/// Gamma^mu = [[0, g^mu], [g^mu, 0]], the 8x8 matrices of the doubled system.
Mat8 big_gamma(int mu, GammaBasis basis = GammaBasis::Chiral);

/// L5 = diag(g5, -g5) (chiral basis).
Mat8 ell5();

/// S = (1/sqrt2)[[1,1],[1,-1]] in 2x2 blocks; gamma_std = S gamma_chiral S†.
Mat4 basis_change_unitary();

Mat4 change_basis(const Mat4& m, GammaBasis from, GammaBasis to);
Vec4 change_basis(const Vec4& v, GammaBasis from, GammaBasis to);

}  // namespace sforge

namespace sforge {

/// min over scalars c of |w - c v| / |w|: the fraction of w not parallel to v.
template <std::size_t N>
double projection_residual(const Vector<N>& w, const Vector<N>& v) {
  const double ww = w.norm();
  const double vv = inner(v, v).real();
  if (ww == 0.0 || vv == 0.0) throw Error(ErrorCode::InvalidArgument, "projection of a zero vector");
  const Complex c = inner(v, w) / vv;
  return (w - c * v).norm() / ww;
}

}  // namespace sforge
