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

#include "qembed/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qembed {

// ---------------------------------------------------------------------------
// Vec helpers
// ---------------------------------------------------------------------------

double dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("dot: length mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm2(const Vec& x) { return std::sqrt(dot(x, x)); }

Vec add(const Vec& x, const Vec& y) {
  Vec z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y.at(i);
  return z;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y.at(i);
  return z;
}

Vec scale(double s, const Vec& x) {
  Vec z = x;
  for (double& v : z) v *= s;
  return z;
}

// ---------------------------------------------------------------------------
// CMat
// ---------------------------------------------------------------------------

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

static void require_same_shape(const CMat& x, const CMat& y, const char* who) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument(std::string(who) + ": shape mismatch");
  }
}

CMat& CMat::operator+=(const CMat& o) {
  require_same_shape(*this, o, "CMat::operator+=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  require_same_shape(*this, o, "CMat::operator-=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

CMat CMat::adjoint() const {
  CMat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

CMat CMat::conjugate() const {
  CMat m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = std::conj((*this)(i, j));
  return m;
}

CMat CMat::transpose() const {
  CMat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

cplx CMat::trace() const {
  if (!is_square()) throw std::invalid_argument("CMat::trace: not square");
  cplx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::frob_norm() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double CMat::max_abs() const {
  double s = 0.0;
  for (const auto& v : a_) s = std::max(s, std::abs(v));
  return s;
}

CMat operator+(CMat x, const CMat& y) { return x += y; }
CMat operator-(CMat x, const CMat& y) { return x -= y; }

CMat operator*(const CMat& x, const CMat& y) {
  if (x.cols() != y.rows()) {
    throw std::invalid_argument("CMat::operator*: inner dimension mismatch");
  }
  CMat z(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int k = 0; k < x.cols(); ++k) {
      cplx xik = x(i, k);
      if (xik == cplx(0.0)) continue;
      for (int j = 0; j < y.cols(); ++j) z(i, j) += xik * y(k, j);
    }
  }
  return z;
}

CMat operator*(cplx s, CMat x) { return x *= s; }

CMat kron(const CMat& x, const CMat& y) {
  CMat z(x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) {
      cplx xij = x(i, j);
      if (xij == cplx(0.0)) continue;
      for (int k = 0; k < y.rows(); ++k)
        for (int l = 0; l < y.cols(); ++l)
          z(i * y.rows() + k, j * y.cols() + l) = xij * y(k, l);
    }
  return z;
}

bool is_hermitian(const CMat& m, double tol) {
  if (!m.is_square()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    if (std::abs(m(i, i).imag()) > tol) return false;
    for (int j = i + 1; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

void require_hermitian(const CMat& m, const char* who) {
  if (!m.is_square()) {
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  }
  if (!is_hermitian(m)) {
    throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian");
  }
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver
// ---------------------------------------------------------------------------

static double off_diagonal_norm(const CMat& a) {
  double s = 0.0;
  for (int p = 0; p < a.rows(); ++p)
    for (int q = p + 1; q < a.cols(); ++q) s += 2.0 * std::norm(a(p, q));
  return std::sqrt(s);
}

EigDecomposition herm_eig(const CMat& m) {
  require_hermitian(m, "herm_eig");
  const int n = m.rows();
  CMat a = m;
  // Symmetrize exactly so rounding in the input cannot bias the iteration.
  for (int i = 0; i < n; ++i) {
    a(i, i) = cplx(a(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      cplx mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = mean;
      a(j, i) = std::conj(mean);
    }
  }
  CMat v = CMat::identity(n);
  const double scale = a.frob_norm();
  const double threshold = kJacobiTol * std::max(scale, 1e-300);

  if (n > 1 && scale > 0.0) {
    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
      if (off_diagonal_norm(a) <= threshold) {
        converged = true;
        break;
      }
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          double r = std::abs(a(p, q));
          if (r <= threshold / (n * n)) continue;
          cplx phase = a(p, q) / r;
          double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
          double t;
          if (tau >= 0.0) {
            t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
          } else {
            t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
          }
          double c = 1.0 / std::sqrt(1.0 + t * t);
          double s = t * c;
          // a <- U^dagger a U with the rotation in the (p, q) plane.
          for (int k = 0; k < n; ++k) {
            cplx akp = a(k, p), akq = a(k, q);
            a(k, p) = c * akp - s * std::conj(phase) * akq;
            a(k, q) = s * phase * akp + c * akq;
          }
          for (int k = 0; k < n; ++k) {
            cplx apk = a(p, k), aqk = a(q, k);
            a(p, k) = c * apk - s * phase * aqk;
            a(q, k) = s * std::conj(phase) * apk + c * aqk;
          }
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          a(p, p) = cplx(a(p, p).real(), 0.0);
          a(q, q) = cplx(a(q, q).real(), 0.0);
          for (int k = 0; k < n; ++k) {
            cplx vkp = v(k, p), vkq = v(k, q);
            v(k, p) = c * vkp - s * std::conj(phase) * vkq;
            v(k, q) = s * phase * vkp + c * vkq;
          }
        }
      }
    }
    if (!converged && off_diagonal_norm(a) > threshold) {
      throw std::runtime_error("herm_eig: Jacobi iteration did not converge");
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigDecomposition out;
  out.values.resize(n);
  out.vectors = CMat(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> herm_eigenvalues(const CMat& m) {
  return herm_eig(m).values;
}

double min_eigenvalue(const CMat& m) { return herm_eigenvalues(m).front(); }

bool is_psd(const CMat& m, double tol) {
  return min_eigenvalue(m) >= -tol * std::max(1.0, m.frob_norm());
}

double hs_inner(const CMat& x, const CMat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || !x.is_square()) {
    throw std::invalid_argument("hs_inner: dimension mismatch");
  }
  cplx t = 0.0;
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) t += x(i, k) * y(k, i);
  return t.real();
}

CMat sqrt_psd(const CMat& m, double tol) {
  EigDecomposition eig = herm_eig(m);
  const double floor = -tol * std::max(1.0, m.frob_norm());
  const int n = m.rows();
  CMat out(n, n);
  for (int k = 0; k < n; ++k) {
    double lam = eig.values[k];
    if (lam < floor) {
      throw std::invalid_argument("sqrt_psd: matrix is not PSD");
    }
    double root = std::sqrt(std::max(lam, 0.0));
    if (root == 0.0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(i, j) += root * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  return out;
}

CMat support_isometry(const CMat& m, double cutoff) {
  EigDecomposition eig = herm_eig(m);
  std::vector<int> keep;
  for (int k = 0; k < m.rows(); ++k) {
    if (eig.values[k] > cutoff) keep.push_back(k);
  }
  CMat iso(m.rows(), static_cast<int>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    for (int i = 0; i < m.rows(); ++i) iso(i, static_cast<int>(c)) = eig.vectors(i, keep[c]);
  return iso;
}

// ---------------------------------------------------------------------------
// RMat
// ---------------------------------------------------------------------------

RMat RMat::identity(int n) {
  RMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

static void require_same_shape(const RMat& x, const RMat& y, const char* who) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument(std::string(who) + ": shape mismatch");
  }
}

RMat& RMat::operator+=(const RMat& o) {
  require_same_shape(*this, o, "RMat::operator+=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RMat& RMat::operator-=(const RMat& o) {
  require_same_shape(*this, o, "RMat::operator-=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RMat& RMat::operator*=(double s) {
  for (auto& v : a_) v *= s;
  return *this;
}

RMat RMat::transpose() const {
  RMat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

double RMat::frob_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double RMat::max_abs() const {
  double s = 0.0;
  for (double v : a_) s = std::max(s, std::abs(v));
  return s;
}

Vec RMat::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw std::invalid_argument("RMat::apply: length mismatch");
  }
  Vec y(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Vec RMat::apply_transposed(const Vec& x) const {
  if (static_cast<int>(x.size()) != rows_) {
    throw std::invalid_argument("RMat::apply_transposed: length mismatch");
  }
  Vec y(cols_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double xi = x[i];
    if (xi == 0.0) continue;
    for (int j = 0; j < cols_; ++j) y[j] += (*this)(i, j) * xi;
  }
  return y;
}

void RMat::set_column(int j, const Vec& col) {
  if (static_cast<int>(col.size()) != rows_) {
    throw std::invalid_argument("RMat::set_column: length mismatch");
  }
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = col[i];
}

Vec RMat::column(int j) const {
  Vec col(rows_);
  for (int i = 0; i < rows_; ++i) col[i] = (*this)(i, j);
  return col;
}

RMat operator+(RMat x, const RMat& y) { return x += y; }
RMat operator-(RMat x, const RMat& y) { return x -= y; }

RMat operator*(const RMat& x, const RMat& y) {
  if (x.cols() != y.rows()) {
    throw std::invalid_argument("RMat::operator*: inner dimension mismatch");
  }
  RMat z(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      double xik = x(i, k);
      if (xik == 0.0) continue;
      for (int j = 0; j < y.cols(); ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

RMat operator*(double s, RMat x) { return x *= s; }

Vec lstsq(const RMat& a, const Vec& b) {
  const int m = a.rows();
  const int n = a.cols();
  if (static_cast<int>(b.size()) != m) {
    throw std::invalid_argument("lstsq: length mismatch");
  }
  RMat r = a;
  Vec rhs = b;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Vec colnorm(n);
  for (int j = 0; j < n; ++j) colnorm[j] = norm2(r.column(j));
  const double rank_tol = 1e-12 * std::max(1.0, *std::max_element(colnorm.begin(), colnorm.end(), [](double x, double y) { return std::abs(x) < std::abs(y); }));

  const int steps = std::min(m, n);
  int effective_rank = 0;
  for (int k = 0; k < steps; ++k) {
    // Column pivot on remaining norms.
    int pivot = k;
    double best = -1.0;
    for (int j = k; j < n; ++j) {
      double s = 0.0;
      for (int i = k; i < m; ++i) s += r(i, j) * r(i, j);
      if (s > best) {
        best = s;
        pivot = j;
      }
    }
    if (pivot != k) {
      for (int i = 0; i < m; ++i) std::swap(r(i, k), r(i, pivot));
      std::swap(perm[k], perm[pivot]);
    }
    double alpha = std::sqrt(best);
    if (alpha <= rank_tol) break;
    effective_rank = k + 1;
    // Householder vector for column k.
    Vec v(m - k, 0.0);
    for (int i = k; i < m; ++i) v[i - k] = r(i, k);
    double sign = v[0] >= 0.0 ? 1.0 : -1.0;
    v[0] += sign * alpha;
    double vnorm = 0.0;
    for (double x : v) vnorm += x * x;
    if (vnorm == 0.0) continue;
    for (int j = k; j < n; ++j) {
      double proj = 0.0;
      for (int i = k; i < m; ++i) proj += v[i - k] * r(i, j);
      proj *= 2.0 / vnorm;
      for (int i = k; i < m; ++i) r(i, j) -= proj * v[i - k];
    }
    double proj = 0.0;
    for (int i = k; i < m; ++i) proj += v[i - k] * rhs[i];
    proj *= 2.0 / vnorm;
    for (int i = k; i < m; ++i) rhs[i] -= proj * v[i - k];
  }

  Vec z(n, 0.0);
  for (int k = effective_rank - 1; k >= 0; --k) {
    double s = rhs[k];
    for (int j = k + 1; j < effective_rank; ++j) s -= r(k, j) * z[j];
    z[k] = s / r(k, k);
  }
  Vec x(n, 0.0);
  for (int k = 0; k < n; ++k) x[perm[k]] = z[k];
  return x;
}

RMat orthonormal_columns(const RMat& a, double tol) {
  std::vector<Vec> basis;
  for (int j = 0; j < a.cols(); ++j) {
    Vec col = a.column(j);
    double original = norm2(col);
    for (const Vec& q : basis) {
      double proj = dot(q, col);
      for (std::size_t i = 0; i < col.size(); ++i) col[i] -= proj * q[i];
    }
    // Second pass for numerical orthogonality.
    for (const Vec& q : basis) {
      double proj = dot(q, col);
      for (std::size_t i = 0; i < col.size(); ++i) col[i] -= proj * q[i];
    }
    double rem = norm2(col);
    if (rem > tol * (1.0 + original)) {
      basis.push_back(scale(1.0 / rem, col));
    }
  }
  RMat q(a.rows(), static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) q.set_column(static_cast<int>(j), basis[j]);
  return q;
}

std::vector<double> singular_values(const RMat& a) {
  const bool wide = a.rows() < a.cols();
  const RMat& b = a;
  int k = wide ? a.rows() : a.cols();
  CMat gram(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      double s = 0.0;
      if (wide) {
        for (int l = 0; l < a.cols(); ++l) s += b(i, l) * b(j, l);
      } else {
        for (int l = 0; l < a.rows(); ++l) s += b(l, i) * b(l, j);
      }
      gram(i, j) = s;
    }
  std::vector<double> ev = herm_eigenvalues(gram);
  std::vector<double> sv;
  sv.reserve(ev.size());
  for (auto it = ev.rbegin(); it != ev.rend(); ++it) sv.push_back(std::sqrt(std::max(*it, 0.0)));
  return sv;
}

int rank(const RMat& a, double tol) {
  // Householder QR with column pivoting; the Gram-matrix route would square
  // the conditioning and blur ranks near the tolerance.
  RMat r = a;
  const int m = r.rows();
  const int n = r.cols();
  const int steps = std::min(m, n);
  double largest = 0.0;
  int rk = 0;
  for (int k = 0; k < steps; ++k) {
    int pivot = k;
    double best = -1.0;
    for (int j = k; j < n; ++j) {
      double s = 0.0;
      for (int i = k; i < m; ++i) s += r(i, j) * r(i, j);
      if (s > best) {
        best = s;
        pivot = j;
      }
    }
    if (pivot != k) {
      for (int i = 0; i < m; ++i) std::swap(r(i, k), r(i, pivot));
    }
    double alpha = std::sqrt(std::max(best, 0.0));
    if (k == 0) largest = alpha;
    if (alpha <= tol * std::max(1.0, largest)) break;
    ++rk;
    Vec v(m - k, 0.0);
    for (int i = k; i < m; ++i) v[i - k] = r(i, k);
    double sign = v[0] >= 0.0 ? 1.0 : -1.0;
    v[0] += sign * alpha;
    double vnorm = 0.0;
    for (double x : v) vnorm += x * x;
    if (vnorm == 0.0) continue;
    for (int j = k; j < n; ++j) {
      double proj = 0.0;
      for (int i = k; i < m; ++i) proj += v[i - k] * r(i, j);
      proj *= 2.0 / vnorm;
      for (int i = k; i < m; ++i) r(i, j) -= proj * v[i - k];
    }
  }
  return rk;
}

}  // namespace qembed
