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

#include <complex>
#include <vector>

namespace qembed {

using cplx = std::complex<double>;
using Vec = std::vector<double>;

/// Absolute tolerance for hermiticity checks.
inline constexpr double kHermTol = 1e-10;
/// Relative tolerance for spectral reconstruction residuals.
inline constexpr double kEigTol = 1e-9;
/// Jacobi sweep convergence: off-diagonal Frobenius norm relative to input.
inline constexpr double kJacobiTol = 1e-12;

// ---------------------------------------------------------------------------
// Real vectors
// ---------------------------------------------------------------------------

double dot(const Vec& x, const Vec& y);
double norm2(const Vec& x);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scale(double s, const Vec& x);

// ---------------------------------------------------------------------------
// Dense complex matrices (row-major)
// ---------------------------------------------------------------------------

class CMat {
 public:
  CMat() = default;
  CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cplx s);

  CMat adjoint() const;
  CMat conjugate() const;
  CMat transpose() const;
  cplx trace() const;
  double frob_norm() const;
  double max_abs() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

CMat operator+(CMat x, const CMat& y);
CMat operator-(CMat x, const CMat& y);
CMat operator*(const CMat& x, const CMat& y);
CMat operator*(cplx s, CMat x);

/// Kronecker product; dimensions multiply.
CMat kron(const CMat& x, const CMat& y);

bool is_hermitian(const CMat& m, double tol = kHermTol);
/// Throws std::invalid_argument naming `who` if m is not square Hermitian.
void require_hermitian(const CMat& m, const char* who);

struct EigDecomposition {
  std::vector<double> values;  // ascending
  CMat vectors;                // column k pairs with values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Deterministic and unconditionally stable at the sizes used here (n <= 64).
EigDecomposition herm_eig(const CMat& m);

/// Eigenvalues only, ascending.
std::vector<double> herm_eigenvalues(const CMat& m);

double min_eigenvalue(const CMat& m);

/// PSD test: min eigenvalue >= -tol * max(1, frob_norm(m)).
bool is_psd(const CMat& m, double tol);

/// Hilbert-Schmidt inner product tr(x y); real for Hermitian arguments.
double hs_inner(const CMat& x, const CMat& y);

/// PSD square root. Eigenvalues below -tol * max(1, norm) are rejected,
/// small negatives are clamped to zero.
CMat sqrt_psd(const CMat& m, double tol = 1e-8);

/// Isometry onto the span of eigenvectors with eigenvalue > cutoff
/// (n x k matrix with orthonormal columns).
CMat support_isometry(const CMat& m, double cutoff);

// ---------------------------------------------------------------------------
// Dense real matrices (row-major)
// ---------------------------------------------------------------------------

class RMat {
 public:
  RMat() = default;
  RMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const double& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  RMat& operator+=(const RMat& o);
  RMat& operator-=(const RMat& o);
  RMat& operator*=(double s);

  RMat transpose() const;
  double frob_norm() const;
  double max_abs() const;

  /// y = M x
  Vec apply(const Vec& x) const;
  /// y = M^T x
  Vec apply_transposed(const Vec& x) const;

  void set_column(int j, const Vec& col);
  Vec column(int j) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

RMat operator+(RMat x, const RMat& y);
RMat operator-(RMat x, const RMat& y);
RMat operator*(const RMat& x, const RMat& y);
RMat operator*(double s, RMat x);

/// Minimum-residual solution of A x = b via Householder QR with column
/// pivoting; rank-deficient columns get zero coefficients.
Vec lstsq(const RMat& a, const Vec& b);

/// Orthonormal basis of the column space (modified Gram-Schmidt, columns with
/// residual below tol * (1 + original norm) are dropped).
RMat orthonormal_columns(const RMat& a, double tol = 1e-10);

/// Singular values (descending), computed from the Gram matrix.
std::vector<double> singular_values(const RMat& a);

int rank(const RMat& a, double tol);

}  // namespace qembed
