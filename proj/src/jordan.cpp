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

#include "qembed/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qembed {

namespace {

void require_catalog(const ModelSpec& m, const char* who) {
  if (!m.is_catalog()) {
    throw UnsupportedStructureError(std::string(who) +
                                    ": polyhedral models carry no Jordan structure");
  }
}

void require_dim(const ModelSpec& m, const Vec& v, const char* who) {
  if (static_cast<int>(v.size()) != ambient_dim(m)) {
    throw std::invalid_argument(std::string(who) + ": coordinate length does not match the model");
  }
}

}  // namespace

Vec jordan_product(const ModelSpec& m, const Vec& x, const Vec& y) {
  require_catalog(m, "jordan_product");
  require_dim(m, x, "jordan_product");
  require_dim(m, y, "jordan_product");
  switch (m.kind) {
    case ModelSpec::Kind::Classical: {
      Vec z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] * y[i];
      return z;
    }
    case ModelSpec::Kind::Quantum:
      switch (m.field) {
        case QuantumField::Complex: {
          CMat a = coords_to_herm(m.n, x);
          CMat b = coords_to_herm(m.n, y);
          return herm_to_coords(0.5 * (a * b + b * a));
        }
        case QuantumField::Real: {
          CMat a = coords_to_sym(m.n, x);
          CMat b = coords_to_sym(m.n, y);
          return sym_to_coords(0.5 * (a * b + b * a));
        }
        case QuantumField::Quaternion: {
          QMat a = coords_to_qherm(m.n, x);
          QMat b = coords_to_qherm(m.n, y);
          return qherm_to_coords(0.5 * (a * b + b * a));
        }
      }
      return {};
    case ModelSpec::Kind::Spin: {
      // (t, x) o (s, y) = (t s + x.y, t y + s x); matches the gamma-matrix
      // representation (t I + x.gamma) o (s I + y.gamma).
      Vec z(m.d + 1, 0.0);
      z[0] = x[0] * y[0];
      for (int i = 1; i <= m.d; ++i) {
        z[0] += x[i] * y[i];
        z[i] = x[0] * y[i] + y[0] * x[i];
      }
      return z;
    }
    case ModelSpec::Kind::DirectSum: {
      Vec z;
      auto ranges = summand_ranges(m);
      for (std::size_t i = 0; i < ranges.size(); ++i) {
        Vec xi(x.begin() + ranges[i].first, x.begin() + ranges[i].first + ranges[i].second);
        Vec yi(y.begin() + ranges[i].first, y.begin() + ranges[i].first + ranges[i].second);
        Vec zi = jordan_product(m.summands[i], xi, yi);
        z.insert(z.end(), zi.begin(), zi.end());
      }
      return z;
    }
    case ModelSpec::Kind::Polyhedral:
      break;
  }
  return {};
}

Vec jordan_unit(const ModelSpec& m) {
  require_catalog(m, "jordan_unit");
  return unit_effect(m);
}

Vec jordan_square(const ModelSpec& m, const Vec& x) { return jordan_product(m, x, x); }

namespace {

std::optional<Vec> spin_sqrt(int d, const Vec& v, double tol) {
  double s = v[0];
  double ynorm = 0.0;
  for (int i = 1; i <= d; ++i) ynorm += v[i] * v[i];
  ynorm = std::sqrt(ynorm);
  if (s < -tol || ynorm > s + tol) return std::nullopt;
  Vec root(d + 1, 0.0);
  if (ynorm <= tol * std::max(1.0, s)) {
    root[0] = std::sqrt(std::max(s, 0.0));
    return root;
  }
  // Solve (t^2 + ||x||^2, 2 t x) = (s, y): take the larger root for t.
  double disc = std::max(s * s - ynorm * ynorm, 0.0);
  double t = std::sqrt((s + std::sqrt(disc)) / 2.0);
  root[0] = t;
  for (int i = 1; i <= d; ++i) root[i] = v[i] / (2.0 * t);
  return root;
}

std::optional<Vec> psd_sqrt_coords(const CMat& mat, double tol,
                                   const std::function<Vec(const CMat&)>& to_coords) {
  double floor = -tol * std::max(1.0, mat.frob_norm());
  EigDecomposition eig = herm_eig(mat);
  if (eig.values.front() < floor) return std::nullopt;
  const int n = mat.rows();
  CMat root(n, n);
  for (int k = 0; k < n; ++k) {
    double lam = std::sqrt(std::max(eig.values[k], 0.0));
    if (lam == 0.0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        root(i, j) += lam * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  return to_coords(root);
}

}  // namespace

std::optional<Vec> jordan_sqrt(const ModelSpec& m, const Vec& v, double tol) {
  require_catalog(m, "jordan_sqrt");
  require_dim(m, v, "jordan_sqrt");
  switch (m.kind) {
    case ModelSpec::Kind::Classical: {
      Vec root(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < -tol) return std::nullopt;
        root[i] = std::sqrt(std::max(v[i], 0.0));
      }
      return root;
    }
    case ModelSpec::Kind::Quantum:
      switch (m.field) {
        case QuantumField::Complex:
          return psd_sqrt_coords(coords_to_herm(m.n, v), tol,
                                 [](const CMat& r) { return herm_to_coords(r); });
        case QuantumField::Real: {
          auto fix = [](const CMat& r) {
            CMat real(r.rows(), r.cols());
            for (int i = 0; i < r.rows(); ++i)
              for (int j = 0; j < r.cols(); ++j) real(i, j) = r(i, j).real();
            return sym_to_coords(real);
          };
          return psd_sqrt_coords(coords_to_sym(m.n, v), tol, fix);
        }
        case QuantumField::Quaternion: {
          // The PSD root of the symplectic image keeps the block symmetry, so
          // it descends to a quaternionic root.
          CMat image = complexify(coords_to_qherm(m.n, v));
          auto back = [&](const CMat& r) { return qherm_to_coords(symplectic_inverse(r)); };
          return psd_sqrt_coords(image, tol, back);
        }
      }
      return std::nullopt;
    case ModelSpec::Kind::Spin:
      return spin_sqrt(m.d, v, tol);
    case ModelSpec::Kind::DirectSum: {
      Vec root;
      auto ranges = summand_ranges(m);
      for (std::size_t i = 0; i < ranges.size(); ++i) {
        Vec vi(v.begin() + ranges[i].first, v.begin() + ranges[i].first + ranges[i].second);
        auto ri = jordan_sqrt(m.summands[i], vi, tol);
        if (!ri) return std::nullopt;
        root.insert(root.end(), ri->begin(), ri->end());
      }
      return root;
    }
    case ModelSpec::Kind::Polyhedral:
      break;
  }
  return std::nullopt;
}

bool is_square_cone_member(const ModelSpec& m, const Vec& v, double tol) {
  return jordan_sqrt(m, v, tol).has_value();
}

VerificationReport check_jordan_axioms(const ModelSpec& m, int trials, double tol,
                                       std::uint64_t seed) {
  require_catalog(m, "check_jordan_axioms");
  VerificationReport report;
  double worst_comm = 0.0, worst_identity = 0.0, worst_euclid = 0.0, worst_unit = 0.0;
  const Vec unit = jordan_unit(m);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    Vec x = random_element(m, rng);
    Vec y = random_element(m, rng);
    Vec z = random_element(m, rng);

    Vec xy = jordan_product(m, x, y);
    Vec yx = jordan_product(m, y, x);
    worst_comm = std::max(worst_comm, norm2(sub(xy, yx)));

    Vec xx = jordan_square(m, x);
    Vec lhs = jordan_product(m, xy, xx);
    Vec rhs = jordan_product(m, x, jordan_product(m, y, xx));
    worst_identity = std::max(worst_identity, norm2(sub(lhs, rhs)));

    double left = pairing(m, x, jordan_product(m, z, y));
    double right = pairing(m, jordan_product(m, z, x), y);
    worst_euclid = std::max(worst_euclid, std::abs(left - right));

    worst_unit = std::max(worst_unit, norm2(sub(jordan_product(m, unit, x), x)));
  }
  report.add_residual("commutativity", worst_comm, tol);
  report.add_residual("jordan_identity", worst_identity, tol);
  report.add_residual("euclidean_property", worst_euclid, tol);
  report.add_residual("unit_law", worst_unit, tol);
  return report;
}

}  // namespace qembed
