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

#include "qembed/quaternion.hpp"

#include <cmath>
#include <stdexcept>

namespace qembed {

double Quaternion::abs() const { return std::sqrt(norm_sq()); }

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  a += o.a;
  b += o.b;
  c += o.c;
  d += o.d;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  a -= o.a;
  b -= o.b;
  c -= o.c;
  d -= o.d;
  return *this;
}

Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  return {
      x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
      x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
      x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
      x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a,
  };
}

Quaternion operator*(double s, const Quaternion& x) {
  return {s * x.a, s * x.b, s * x.c, s * x.d};
}

QMat QMat::identity(int n) {
  QMat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = Quaternion(1.0);
  return m;
}

QMat& QMat::operator+=(const QMat& o) {
  if (n_ != o.n_) throw std::invalid_argument("QMat::operator+=: size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

QMat& QMat::operator-=(const QMat& o) {
  if (n_ != o.n_) throw std::invalid_argument("QMat::operator-=: size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

QMat& QMat::operator*=(double s) {
  for (auto& q : a_) q = s * q;
  return *this;
}

QMat QMat::adjoint() const {
  QMat m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(j, i) = (*this)(i, j).conj();
  return m;
}

double QMat::frob_norm() const {
  double s = 0.0;
  for (const auto& q : a_) s += q.norm_sq();
  return std::sqrt(s);
}

double QMat::re_trace() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) s += (*this)(i, i).a;
  return s;
}

QMat operator+(QMat x, const QMat& y) { return x += y; }
QMat operator-(QMat x, const QMat& y) { return x -= y; }

QMat operator*(const QMat& x, const QMat& y) {
  if (x.size() != y.size()) throw std::invalid_argument("QMat::operator*: size mismatch");
  const int n = x.size();
  QMat z(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Quaternion& xik = x(i, k);
      if (xik.norm_sq() == 0.0) continue;
      for (int j = 0; j < n; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

QMat operator*(double s, QMat x) { return x *= s; }

bool is_quat_hermitian(const QMat& m, double tol) {
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    const Quaternion& qi = m(i, i);
    if (std::abs(qi.b) > tol || std::abs(qi.c) > tol || std::abs(qi.d) > tol) return false;
    for (int j = i + 1; j < n; ++j) {
      Quaternion diff = m(i, j) - m(j, i).conj();
      if (diff.abs() > tol) return false;
    }
  }
  return true;
}

CMat symplectic_representation(const QMat& x) {
  const int n = x.size();
  CMat m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx alpha = x(i, j).alpha();
      cplx beta = x(i, j).beta();
      m(i, j) = alpha;
      m(i, j + n) = beta;
      m(i + n, j) = -std::conj(beta);
      m(i + n, j + n) = std::conj(alpha);
    }
  return m;
}

CMat complexify(const QMat& x) {
  if (!is_quat_hermitian(x)) {
    throw std::invalid_argument("complexify: matrix is not quaternionic Hermitian");
  }
  return symplectic_representation(x);
}

QMat symplectic_inverse(const CMat& m, double tol) {
  if (!m.is_square() || m.rows() % 2 != 0) {
    throw std::invalid_argument("symplectic_inverse: size must be even");
  }
  const int n = m.rows() / 2;
  const double scale = std::max(1.0, m.frob_norm());
  QMat x(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx alpha = m(i, j);
      cplx beta = m(i, j + n);
      if (std::abs(m(i + n, j + n) - std::conj(alpha)) > tol * scale ||
          std::abs(m(i + n, j) + std::conj(beta)) > tol * scale) {
        throw std::invalid_argument("symplectic_inverse: block symmetry violated");
      }
      x(i, j) = Quaternion::from_split(alpha, beta);
    }
  return x;
}

}  // namespace qembed
