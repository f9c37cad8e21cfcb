// Copyright 2026 The qembed authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qembed/linalg.hpp"

namespace qembed {

/// Hamilton quaternion a + b i + c j + d k.
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  Quaternion() = default;
  Quaternion(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}
  explicit Quaternion(double real) : a(real) {}

  /// Complex split q = alpha + beta j with j acting on the right.
  cplx alpha() const { return {a, b}; }
  cplx beta() const { return {c, d}; }
  static Quaternion from_split(cplx alpha, cplx beta) {
    return {alpha.real(), alpha.imag(), beta.real(), beta.imag()};
  }

  Quaternion conj() const { return {a, -b, -c, -d}; }
  double norm_sq() const { return a * a + b * b + c * c + d * d; }
  double abs() const;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
};

Quaternion operator+(Quaternion x, const Quaternion& y);
Quaternion operator-(Quaternion x, const Quaternion& y);
Quaternion operator*(const Quaternion& x, const Quaternion& y);
Quaternion operator*(double s, const Quaternion& x);

/// Dense square quaternionic matrix, row-major.
class QMat {
 public:
  QMat() = default;
  explicit QMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static QMat identity(int n);

  int size() const { return n_; }

  Quaternion& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Quaternion& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  QMat& operator+=(const QMat& o);
  QMat& operator-=(const QMat& o);
  QMat& operator*=(double s);

  /// Conjugate transpose.
  QMat adjoint() const;
  double frob_norm() const;
  /// Real part of the quaternionic trace.
  double re_trace() const;

 private:
  int n_ = 0;
  std::vector<Quaternion> a_;
};

QMat operator+(QMat x, const QMat& y);
QMat operator-(QMat x, const QMat& y);
QMat operator*(const QMat& x, const QMat& y);
QMat operator*(double s, QMat x);

bool is_quat_hermitian(const QMat& m, double tol = kHermTol);

/// The 2n x 2n complex image of x = A + B j under the symplectic
/// representation [[A, B], [-conj(B), conj(A)]]. A ring homomorphism for
/// arbitrary quaternionic matrices.
CMat symplectic_representation(const QMat& x);

/// symplectic_representation restricted to Hermitian inputs; the result is
/// Hermitian and carries each quaternionic eigenvalue twice.
/// Throws std::invalid_argument on non-Hermitian input.
CMat complexify(const QMat& x);

/// Inverse of symplectic_representation on matrices with the quaternionic
/// block symmetry. Throws if the block symmetry is violated beyond tol.
QMat symplectic_inverse(const CMat& m, double tol = 1e-8);

}  // namespace qembed
