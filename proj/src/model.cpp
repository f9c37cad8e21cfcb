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

#include "qembed/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qembed/jordan.hpp"
#include "qembed/nnls.hpp"

namespace qembed {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kPolyTol = 1e-9;

void require_count(int value, const char* who) {
  if (value < 1) {
    throw std::invalid_argument(std::string(who) + ": count must be >= 1");
  }
}

RMat rays_as_columns(const std::vector<Vec>& rays, int dim) {
  RMat a(dim, static_cast<int>(rays.size()));
  for (std::size_t j = 0; j < rays.size(); ++j) a.set_column(static_cast<int>(j), rays[j]);
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction and validation
// ---------------------------------------------------------------------------

ModelSpec ModelSpec::classical(int n) {
  require_count(n, "ModelSpec::classical");
  ModelSpec m;
  m.kind = Kind::Classical;
  m.n = n;
  return m;
}

ModelSpec ModelSpec::quantum(QuantumField field, int n) {
  require_count(n, "ModelSpec::quantum");
  ModelSpec m;
  m.kind = Kind::Quantum;
  m.field = field;
  m.n = n;
  return m;
}

ModelSpec ModelSpec::spin(int d) {
  require_count(d, "ModelSpec::spin");
  if (d == 1) return classical(2);  // the 1-ball segment is the classical bit
  ModelSpec m;
  m.kind = Kind::Spin;
  m.d = d;
  return m;
}

ModelSpec ModelSpec::direct_sum(std::vector<ModelSpec> summands) {
  if (summands.empty()) {
    throw std::invalid_argument("ModelSpec::direct_sum: needs at least one summand");
  }
  ModelSpec m;
  m.kind = Kind::DirectSum;
  m.summands = std::move(summands);
  return m;
}

namespace {

// Extreme rays of the dual cone {w : <w, ray_i> >= 0}. A dual ray is pinned
// by a subset of dim-1 rays whose span has a one-dimensional orthogonal
// complement.
std::vector<Vec> dual_cone_rays(int dim, const std::vector<Vec>& rays) {
  const int r = static_cast<int>(rays.size());
  const int k = dim - 1;
  std::vector<Vec> out;

  auto visit = [&](const std::vector<int>& subset) {
    CMat gram(dim, dim);
    for (int s : subset) {
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) gram(i, j) += rays[s][i] * rays[s][j];
    }
    EigDecomposition eig = herm_eig(gram);
    double lam_max = eig.values.back();
    double cutoff = 1e-10 * std::max(1.0, lam_max);
    int null_count = 0;
    for (double lam : eig.values) {
      if (lam <= cutoff) ++null_count;
    }
    if (null_count != 1) return;
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = eig.vectors(i, 0).real();
    double vn = norm2(v);
    if (vn == 0.0) return;
    for (double& x : v) x /= vn;
    for (double sign : {1.0, -1.0}) {
      Vec w = scale(sign, v);
      bool feasible = true;
      for (const Vec& ray : rays) {
        if (dot(w, ray) < -1e-10 * std::max(1.0, norm2(ray))) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      bool duplicate = false;
      for (const Vec& seen : out) {
        if (dot(seen, w) > 1.0 - 1e-9) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) out.push_back(w);
    }
  };

  if (k == 0) {
    visit({});
    return out;
  }
  if (r < k) return out;
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    visit(comb);
    int i = k - 1;
    while (i >= 0 && comb[i] == r - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

void validate_polyhedral(int dim, const Vec& unit, const std::vector<Vec>& rays) {
  if (dim < 1) throw std::invalid_argument("polyhedral: dim must be >= 1");
  if (static_cast<int>(unit.size()) != dim) {
    throw std::invalid_argument("polyhedral: unit length does not match dim");
  }
  if (rays.empty()) throw std::invalid_argument("polyhedral: needs extreme effects");
  for (const Vec& ray : rays) {
    if (static_cast<int>(ray.size()) != dim) {
      throw std::invalid_argument("polyhedral: extreme effect length does not match dim");
    }
    if (norm2(ray) <= kPolyTol) {
      throw std::invalid_argument("polyhedral: zero extreme effect");
    }
  }

  RMat a = rays_as_columns(rays, dim);
  if (rank(a, 1e-10) != dim) {
    throw std::invalid_argument("polyhedral: cone is not generating");
  }

  // Pointedness: zero must not be a convex combination of normalized rays.
  RMat lifted(dim + 1, static_cast<int>(rays.size()));
  for (std::size_t j = 0; j < rays.size(); ++j) {
    Vec col = scale(1.0 / norm2(rays[j]), rays[j]);
    col.push_back(1.0);
    lifted.set_column(static_cast<int>(j), col);
  }
  Vec target(dim + 1, 0.0);
  target[dim] = 1.0;
  if (nnls(lifted, target).residual < kPolyTol) {
    throw std::invalid_argument("polyhedral: cone is not pointed");
  }

  if (nnls(a, unit).residual > kPolyTol * std::max(1.0, norm2(unit))) {
    throw std::invalid_argument("polyhedral: unit is not inside the cone");
  }

  // The unit must be an order unit: strictly positive on every dual ray.
  std::vector<Vec> duals = dual_cone_rays(dim, rays);
  if (duals.empty()) {
    throw std::invalid_argument("polyhedral: degenerate cone (no dual rays)");
  }
  for (const Vec& w : duals) {
    if (dot(w, unit) <= kPolyTol) {
      throw std::invalid_argument("polyhedral: unit is not an order unit");
    }
  }
}

}  // namespace

ModelSpec ModelSpec::polyhedral(int dim, Vec unit, std::vector<Vec> extreme_effects) {
  validate_polyhedral(dim, unit, extreme_effects);
  ModelSpec m;
  m.kind = Kind::Polyhedral;
  m.poly_dim = dim;
  m.poly_unit = std::move(unit);
  m.poly_rays = std::move(extreme_effects);
  return m;
}

bool ModelSpec::is_catalog() const {
  switch (kind) {
    case Kind::Polyhedral:
      return false;
    case Kind::DirectSum:
      return std::all_of(summands.begin(), summands.end(),
                         [](const ModelSpec& s) { return s.is_catalog(); });
    default:
      return true;
  }
}

std::string ModelSpec::name() const {
  switch (kind) {
    case Kind::Classical:
      return "classical(" + std::to_string(n) + ")";
    case Kind::Quantum: {
      const char* f = field == QuantumField::Real      ? "real"
                      : field == QuantumField::Complex ? "complex"
                                                       : "quaternion";
      return std::string("quantum(") + f + "," + std::to_string(n) + ")";
    }
    case Kind::Spin:
      return "spin(" + std::to_string(d) + ")";
    case Kind::DirectSum: {
      std::string s = "direct_sum[";
      for (std::size_t i = 0; i < summands.size(); ++i) {
        if (i) s += ",";
        s += summands[i].name();
      }
      return s + "]";
    }
    case Kind::Polyhedral:
      return "polyhedral(dim=" + std::to_string(poly_dim) +
             ",rays=" + std::to_string(poly_rays.size()) + ")";
  }
  return "?";
}

ModelSpec gbit_model() {
  return ModelSpec::polyhedral(3, {1.0, 0.0, 0.0},
                               {{0.5, 0.5, 0.0},
                                {0.5, -0.5, 0.0},
                                {0.5, 0.0, 0.5},
                                {0.5, 0.0, -0.5}});
}

// ---------------------------------------------------------------------------
// Dimensions, units, pairing
// ---------------------------------------------------------------------------

int ambient_dim(const ModelSpec& m) {
  switch (m.kind) {
    case ModelSpec::Kind::Classical:
      return m.n;
    case ModelSpec::Kind::Quantum:
      switch (m.field) {
        case QuantumField::Real:
          return m.n * (m.n + 1) / 2;
        case QuantumField::Complex:
          return m.n * m.n;
        case QuantumField::Quaternion:
          return m.n * (2 * m.n - 1);
      }
      return 0;
    case ModelSpec::Kind::Spin:
      return m.d + 1;
    case ModelSpec::Kind::DirectSum: {
      int total = 0;
      for (const ModelSpec& s : m.summands) total += ambient_dim(s);
      return total;
    }
    case ModelSpec::Kind::Polyhedral:
      return m.poly_dim;
  }
  return 0;
}

std::vector<std::pair<int, int>> summand_ranges(const ModelSpec& m) {
  if (m.kind != ModelSpec::Kind::DirectSum) {
    throw std::invalid_argument("summand_ranges: not a direct sum");
  }
  std::vector<std::pair<int, int>> out;
  int offset = 0;
  for (const ModelSpec& s : m.summands) {
    int len = ambient_dim(s);
    out.emplace_back(offset, len);
    offset += len;
  }
  return out;
}

Vec unit_effect(const ModelSpec& m) {
  switch (m.kind) {
    case ModelSpec::Kind::Classical:
      return Vec(m.n, 1.0);
    case ModelSpec::Kind::Quantum: {
      Vec v(ambient_dim(m), 0.0);
      for (int i = 0; i < m.n; ++i) v[i] = 1.0;  // diagonal coordinates lead
      return v;
    }
    case ModelSpec::Kind::Spin: {
      Vec v(m.d + 1, 0.0);
      v[0] = 1.0;
      return v;
    }
    case ModelSpec::Kind::DirectSum: {
      Vec v;
      for (const ModelSpec& s : m.summands) {
        Vec part = unit_effect(s);
        v.insert(v.end(), part.begin(), part.end());
      }
      return v;
    }
    case ModelSpec::Kind::Polyhedral:
      return m.poly_unit;
  }
  return {};
}

double pairing(const ModelSpec& m, const Vec& state, const Vec& effect) {
  const int dim = ambient_dim(m);
  if (static_cast<int>(state.size()) != dim || static_cast<int>(effect.size()) != dim) {
    throw std::invalid_argument("pairing: coordinate length does not match the model");
  }
  return dot(state, effect);
}

// ---------------------------------------------------------------------------
// Coordinatization
// ---------------------------------------------------------------------------

Vec herm_to_coords(const CMat& m) {
  require_hermitian(m, "herm_to_coords");
  const int n = m.rows();
  Vec v(static_cast<std::size_t>(n) * n);
  int k = 0;
  for (int i = 0; i < n; ++i) v[k++] = m(i, i).real();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      v[k++] = kSqrt2 * m(i, j).real();
      v[k++] = kSqrt2 * m(i, j).imag();
    }
  return v;
}

CMat coords_to_herm(int n, const Vec& v) {
  if (static_cast<int>(v.size()) != n * n) {
    throw std::invalid_argument("coords_to_herm: wrong coordinate length");
  }
  CMat m(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i) m(i, i) = v[k++];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      cplx entry(v[k] / kSqrt2, v[k + 1] / kSqrt2);
      k += 2;
      m(i, j) = entry;
      m(j, i) = std::conj(entry);
    }
  return m;
}

Vec sym_to_coords(const CMat& m) {
  require_hermitian(m, "sym_to_coords");
  const int n = m.rows();
  Vec v(static_cast<std::size_t>(n) * (n + 1) / 2);
  int k = 0;
  for (int i = 0; i < n; ++i) v[k++] = m(i, i).real();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j).imag()) > kHermTol) {
        throw std::invalid_argument("sym_to_coords: matrix is not real symmetric");
      }
      v[k++] = kSqrt2 * m(i, j).real();
    }
  return v;
}

CMat coords_to_sym(int n, const Vec& v) {
  if (static_cast<int>(v.size()) != n * (n + 1) / 2) {
    throw std::invalid_argument("coords_to_sym: wrong coordinate length");
  }
  CMat m(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i) m(i, i) = v[k++];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double entry = v[k++] / kSqrt2;
      m(i, j) = entry;
      m(j, i) = entry;
    }
  return m;
}

Vec qherm_to_coords(const QMat& m) {
  if (!is_quat_hermitian(m)) {
    throw std::invalid_argument("qherm_to_coords: matrix is not quaternionic Hermitian");
  }
  const int n = m.size();
  Vec v(static_cast<std::size_t>(n) * (2 * n - 1));
  int k = 0;
  for (int i = 0; i < n; ++i) v[k++] = m(i, i).a;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Quaternion& q = m(i, j);
      v[k++] = kSqrt2 * q.a;
      v[k++] = kSqrt2 * q.b;
      v[k++] = kSqrt2 * q.c;
      v[k++] = kSqrt2 * q.d;
    }
  return v;
}

QMat coords_to_qherm(int n, const Vec& v) {
  if (static_cast<int>(v.size()) != n * (2 * n - 1)) {
    throw std::invalid_argument("coords_to_qherm: wrong coordinate length");
  }
  QMat m(n);
  int k = 0;
  for (int i = 0; i < n; ++i) m(i, i) = Quaternion(v[k++]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Quaternion q(v[k] / kSqrt2, v[k + 1] / kSqrt2, v[k + 2] / kSqrt2, v[k + 3] / kSqrt2);
      k += 4;
      m(i, j) = q;
      m(j, i) = q.conj();
    }
  return m;
}

// ---------------------------------------------------------------------------
// Cone membership
// ---------------------------------------------------------------------------

namespace {

void require_dim(const ModelSpec& m, const Vec& v, const char* who) {
  if (static_cast<int>(v.size()) != ambient_dim(m)) {
    throw std::invalid_argument(std::string(who) + ": coordinate length does not match the model");
  }
}

double quantum_violation(const ModelSpec& m, const Vec& v) {
  double min_eig = 0.0;
  switch (m.field) {
    case QuantumField::Real:
      min_eig = min_eigenvalue(coords_to_sym(m.n, v));
      break;
    case QuantumField::Complex:
      min_eig = min_eigenvalue(coords_to_herm(m.n, v));
      break;
    case QuantumField::Quaternion:
      min_eig = min_eigenvalue(complexify(coords_to_qherm(m.n, v)));
      break;
  }
  return std::max(0.0, -min_eig);
}

}  // namespace

double effect_violation(const ModelSpec& m, const Vec& e) {
  require_dim(m, e, "effect_violation");
  switch (m.kind) {
    case ModelSpec::Kind::Classical: {
      double worst = 0.0;
      for (double x : e) worst = std::max(worst, -x);
      return worst;
    }
    case ModelSpec::Kind::Quantum:
      return quantum_violation(m, e);
    case ModelSpec::Kind::Spin: {
      double s = e[0];
      double y = 0.0;
      for (int i = 1; i <= m.d; ++i) y += e[i] * e[i];
      y = std::sqrt(y);
      return std::max({0.0, -s, y - s});
    }
    case ModelSpec::Kind::DirectSum: {
      double worst = 0.0;
      auto ranges = summand_ranges(m);
      for (std::size_t i = 0; i < ranges.size(); ++i) {
        Vec part(e.begin() + ranges[i].first,
                 e.begin() + ranges[i].first + ranges[i].second);
        worst = std::max(worst, effect_violation(m.summands[i], part));
      }
      return worst;
    }
    case ModelSpec::Kind::Polyhedral: {
      RMat a = rays_as_columns(m.poly_rays, m.poly_dim);
      return nnls(a, e).residual;
    }
  }
  return 0.0;
}

double state_violation(const ModelSpec& m, const Vec& w) {
  require_dim(m, w, "state_violation");
  switch (m.kind) {
    case ModelSpec::Kind::Polyhedral: {
      double worst = 0.0;
      for (const Vec& ray : m.poly_rays) worst = std::max(worst, -dot(w, ray));
      return worst;
    }
    case ModelSpec::Kind::DirectSum: {
      double worst = 0.0;
      auto ranges = summand_ranges(m);
      for (std::size_t i = 0; i < ranges.size(); ++i) {
        Vec part(w.begin() + ranges[i].first,
                 w.begin() + ranges[i].first + ranges[i].second);
        worst = std::max(worst, state_violation(m.summands[i], part));
      }
      return worst;
    }
    default:
      // Catalog cones are self-dual in these coordinates.
      return effect_violation(m, w);
  }
}

bool contains_effect(const ModelSpec& m, const Vec& e, double tol) {
  return effect_violation(m, e) <= tol;
}

bool contains_state(const ModelSpec& m, const Vec& w, double tol) {
  return state_violation(m, w) <= tol;
}

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

Vec random_element(const ModelSpec& m, Rng& rng) {
  Vec v(ambient_dim(m));
  for (double& x : v) x = rng.normal();
  return v;
}

Vec sample_effect(const ModelSpec& m, Rng& rng) {
  if (m.kind == ModelSpec::Kind::Polyhedral) {
    Vec e(m.poly_dim, 0.0);
    for (const Vec& ray : m.poly_rays) {
      double w = std::abs(rng.normal());
      for (int i = 0; i < m.poly_dim; ++i) e[i] += w * ray[i];
    }
    return e;
  }
  return jordan_square(m, random_element(m, rng));
}

namespace {

Vec dirichlet_weights(int k, Rng& rng) {
  Vec w(k);
  double total = 0.0;
  for (double& x : w) {
    x = rng.exponential();
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

Vec random_pure_state_coords(const ModelSpec& m, Rng& rng) {
  const int n = m.n;
  switch (m.field) {
    case QuantumField::Complex: {
      std::vector<cplx> v(n);
      double nn = 0.0;
      for (auto& x : v) {
        x = cplx(rng.normal(), rng.normal());
        nn += std::norm(x);
      }
      CMat p(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = v[i] * std::conj(v[j]) / nn;
      return herm_to_coords(p);
    }
    case QuantumField::Real: {
      Vec v(n);
      double nn = 0.0;
      for (auto& x : v) {
        x = rng.normal();
        nn += x * x;
      }
      CMat p(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = v[i] * v[j] / nn;
      return sym_to_coords(p);
    }
    case QuantumField::Quaternion: {
      std::vector<Quaternion> v(n);
      double nn = 0.0;
      for (auto& x : v) {
        x = Quaternion(rng.normal(), rng.normal(), rng.normal(), rng.normal());
        nn += x.norm_sq();
      }
      QMat p(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = (1.0 / nn) * (v[i] * v[j].conj());
      return qherm_to_coords(p);
    }
  }
  return {};
}

}  // namespace

Vec sample_state(const ModelSpec& m, Rng& rng) {
  Vec out;
  switch (m.kind) {
    case ModelSpec::Kind::Classical:
      out = dirichlet_weights(m.n, rng);
      break;
    case ModelSpec::Kind::Quantum: {
      int mixes = m.n + 2;
      Vec w = dirichlet_weights(mixes, rng);
      out.assign(ambient_dim(m), 0.0);
      for (int k = 0; k < mixes; ++k) {
        Vec pure = random_pure_state_coords(m, rng);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += w[k] * pure[i];
      }
      break;
    }
    case ModelSpec::Kind::Spin: {
      int mixes = m.d + 2;
      Vec w = dirichlet_weights(mixes, rng);
      out.assign(m.d + 1, 0.0);
      for (int k = 0; k < mixes; ++k) {
        Vec x(m.d);
        double nn = 0.0;
        for (double& xi : x) {
          xi = rng.normal();
          nn += xi * xi;
        }
        nn = std::sqrt(nn);
        out[0] += w[k];
        for (int i = 0; i < m.d; ++i) out[i + 1] += w[k] * x[i] / nn;
      }
      break;
    }
    case ModelSpec::Kind::DirectSum: {
      Vec w = dirichlet_weights(static_cast<int>(m.summands.size()), rng);
      for (std::size_t i = 0; i < m.summands.size(); ++i) {
        Vec part = scale(w[i], sample_state(m.summands[i], rng));
        out.insert(out.end(), part.begin(), part.end());
      }
      break;
    }
    case ModelSpec::Kind::Polyhedral: {
      std::vector<Vec> extremes = extreme_normalized_states(m);
      Vec w = dirichlet_weights(static_cast<int>(extremes.size()), rng);
      out.assign(m.poly_dim, 0.0);
      for (std::size_t k = 0; k < extremes.size(); ++k)
        for (int i = 0; i < m.poly_dim; ++i) out[i] += w[k] * extremes[k][i];
      break;
    }
  }
  if (state_violation(m, out) > 1e-9) {
    throw std::logic_error("sample_state: sampled state failed the dual-feasibility check");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extremal generators
// ---------------------------------------------------------------------------

namespace {

std::vector<Vec> quantum_rank_one_generators(const ModelSpec& m) {
  const int n = m.n;
  std::vector<Vec> out;
  switch (m.field) {
    case QuantumField::Complex: {
      auto push = [&](const std::vector<cplx>& v) {
        double nn = 0.0;
        for (const auto& x : v) nn += std::norm(x);
        CMat p(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) p(i, j) = v[i] * std::conj(v[j]) / nn;
        out.push_back(herm_to_coords(p));
      };
      for (int i = 0; i < n; ++i) {
        std::vector<cplx> v(n);
        v[i] = 1.0;
        push(v);
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (cplx unit : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)}) {
            std::vector<cplx> v(n);
            v[i] = 1.0;
            v[j] = unit;
            push(v);
          }
      break;
    }
    case QuantumField::Real: {
      auto push = [&](const Vec& v) {
        double nn = dot(v, v);
        CMat p(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) p(i, j) = v[i] * v[j] / nn;
        out.push_back(sym_to_coords(p));
      };
      for (int i = 0; i < n; ++i) {
        Vec v(n, 0.0);
        v[i] = 1.0;
        push(v);
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (double sign : {1.0, -1.0}) {
            Vec v(n, 0.0);
            v[i] = 1.0;
            v[j] = sign;
            push(v);
          }
      break;
    }
    case QuantumField::Quaternion: {
      auto push = [&](const std::vector<Quaternion>& v) {
        double nn = 0.0;
        for (const auto& x : v) nn += x.norm_sq();
        QMat p(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) p(i, j) = (1.0 / nn) * (v[i] * v[j].conj());
        out.push_back(qherm_to_coords(p));
      };
      for (int i = 0; i < n; ++i) {
        std::vector<Quaternion> v(n);
        v[i] = Quaternion(1.0);
        push(v);
      }
      const Quaternion units[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (const Quaternion& u : units)
            for (double sign : {1.0, -1.0}) {
              std::vector<Quaternion> v(n);
              v[i] = Quaternion(1.0);
              v[j] = sign * u;
              push(v);
            }
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<Vec> extremal_effect_generators(const ModelSpec& m) {
  switch (m.kind) {
    case ModelSpec::Kind::Classical: {
      std::vector<Vec> out;
      for (int i = 0; i < m.n; ++i) {
        Vec v(m.n, 0.0);
        v[i] = 1.0;
        out.push_back(v);
      }
      return out;
    }
    case ModelSpec::Kind::Quantum:
      return quantum_rank_one_generators(m);
    case ModelSpec::Kind::Spin: {
      std::vector<Vec> out;
      for (int i = 0; i < m.d; ++i)
        for (double sign : {1.0, -1.0}) {
          Vec v(m.d + 1, 0.0);
          v[0] = 1.0;
          v[i + 1] = sign;
          out.push_back(v);
        }
      return out;
    }
    case ModelSpec::Kind::DirectSum: {
      std::vector<Vec> out;
      const int total = ambient_dim(m);
      auto ranges = summand_ranges(m);
      for (std::size_t i = 0; i < m.summands.size(); ++i) {
        for (const Vec& g : extremal_effect_generators(m.summands[i])) {
          Vec v(total, 0.0);
          std::copy(g.begin(), g.end(), v.begin() + ranges[i].first);
          out.push_back(v);
        }
      }
      return out;
    }
    case ModelSpec::Kind::Polyhedral:
      return m.poly_rays;
  }
  return {};
}

std::vector<Vec> extreme_normalized_states(const ModelSpec& m) {
  if (m.kind == ModelSpec::Kind::Polyhedral) {
    std::vector<Vec> out;
    for (const Vec& w : dual_cone_rays(m.poly_dim, m.poly_rays)) {
      double p = dot(w, m.poly_unit);
      if (p <= kPolyTol) {
        throw std::invalid_argument("extreme_normalized_states: unit is not an order unit");
      }
      out.push_back(scale(1.0 / p, w));
    }
    return out;
  }
  if (m.kind == ModelSpec::Kind::DirectSum) {
    std::vector<Vec> out;
    const int total = ambient_dim(m);
    auto ranges = summand_ranges(m);
    for (std::size_t i = 0; i < m.summands.size(); ++i) {
      for (const Vec& g : extreme_normalized_states(m.summands[i])) {
        Vec v(total, 0.0);
        std::copy(g.begin(), g.end(), v.begin() + ranges[i].first);
        out.push_back(v);
      }
    }
    return out;
  }
  // Catalog extreme effects double as extreme states in these coordinates;
  // they are already normalized against the unit.
  return extremal_effect_generators(m);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string("model: missing field \"") + key + "\"");
  }
  return *it;
}

int require_int(const json& j, const char* key) {
  const json& v = require_field(j, key);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string("model: field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::string require_string(const json& j, const char* key) {
  const json& v = require_field(j, key);
  if (!v.is_string()) {
    throw std::invalid_argument(std::string("model: field \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

Vec require_vector(const json& v, const char* key) {
  if (!v.is_array()) {
    throw std::invalid_argument(std::string("model: field \"") + key + "\" must be an array of numbers");
  }
  Vec out;
  for (const json& x : v) {
    if (!x.is_number()) {
      throw std::invalid_argument(std::string("model: field \"") + key + "\" must be an array of numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

ModelSpec model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("model: expected a JSON object");
  std::string type = require_string(j, "type");
  if (type == "classical") return ModelSpec::classical(require_int(j, "n"));
  if (type == "quantum") {
    std::string f = require_string(j, "field");
    QuantumField field;
    if (f == "real") {
      field = QuantumField::Real;
    } else if (f == "complex") {
      field = QuantumField::Complex;
    } else if (f == "quaternion") {
      field = QuantumField::Quaternion;
    } else {
      throw std::invalid_argument("model: unknown field \"" + f + "\"");
    }
    return ModelSpec::quantum(field, require_int(j, "n"));
  }
  if (type == "spin") return ModelSpec::spin(require_int(j, "d"));
  if (type == "direct_sum") {
    const json& arr = require_field(j, "summands");
    if (!arr.is_array() || arr.empty()) {
      throw std::invalid_argument("model: field \"summands\" must be a non-empty array");
    }
    std::vector<ModelSpec> parts;
    for (const json& s : arr) parts.push_back(model_from_json(s));
    return ModelSpec::direct_sum(std::move(parts));
  }
  if (type == "polyhedral") {
    int dim = require_int(j, "dim");
    Vec unit = require_vector(require_field(j, "unit"), "unit");
    const json& rays_json = require_field(j, "extreme_effects");
    if (!rays_json.is_array()) {
      throw std::invalid_argument("model: field \"extreme_effects\" must be an array");
    }
    std::vector<Vec> rays;
    for (const json& r : rays_json) rays.push_back(require_vector(r, "extreme_effects"));
    return ModelSpec::polyhedral(dim, std::move(unit), std::move(rays));
  }
  throw std::invalid_argument("model: unknown type \"" + type + "\"");
}

nlohmann::json model_to_json(const ModelSpec& m) {
  nlohmann::json j;
  switch (m.kind) {
    case ModelSpec::Kind::Classical:
      j["type"] = "classical";
      j["n"] = m.n;
      break;
    case ModelSpec::Kind::Quantum:
      j["type"] = "quantum";
      j["field"] = m.field == QuantumField::Real      ? "real"
                   : m.field == QuantumField::Complex ? "complex"
                                                      : "quaternion";
      j["n"] = m.n;
      break;
    case ModelSpec::Kind::Spin:
      j["type"] = "spin";
      j["d"] = m.d;
      break;
    case ModelSpec::Kind::DirectSum: {
      j["type"] = "direct_sum";
      nlohmann::json arr = nlohmann::json::array();
      for (const ModelSpec& s : m.summands) arr.push_back(model_to_json(s));
      j["summands"] = arr;
      break;
    }
    case ModelSpec::Kind::Polyhedral:
      j["type"] = "polyhedral";
      j["dim"] = m.poly_dim;
      j["unit"] = m.poly_unit;
      j["extreme_effects"] = m.poly_rays;
      break;
  }
  return j;
}

}  // namespace qembed
