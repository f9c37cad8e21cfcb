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

#include "qembed/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qembed {

namespace {

CMat pauli_x() {
  CMat m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

CMat pauli_y() {
  CMat m(2, 2);
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}

CMat pauli_z() {
  CMat m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

CMat tensor_chain(const std::vector<const CMat*>& factors) {
  CMat out = CMat::identity(1);
  for (const CMat* f : factors) out = kron(out, *f);
  return out;
}

}  // namespace

std::vector<CMat> gamma_matrices(int d) {
  if (d < 2) throw std::invalid_argument("gamma_matrices: d must be >= 2");
  const int half = d / 2;
  const CMat sx = pauli_x();
  const CMat sy = pauli_y();
  const CMat sz = pauli_z();
  const CMat one = CMat::identity(2);

  std::vector<CMat> gammas;
  for (int k = 1; k <= half; ++k) {
    for (const CMat* middle : {&sx, &sy}) {
      std::vector<const CMat*> factors;
      for (int i = 0; i < k - 1; ++i) factors.push_back(&sz);
      factors.push_back(middle);
      for (int i = k; i < half; ++i) factors.push_back(&one);
      gammas.push_back(tensor_chain(factors));
    }
  }
  if (d % 2 == 1) {
    std::vector<const CMat*> factors(half, &sz);
    gammas.push_back(tensor_chain(factors));
  }
  return gammas;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace {

int embedding_dimension(const ModelSpec& m) {
  switch (m.kind) {
    case ModelSpec::Kind::Classical:
      return m.n;
    case ModelSpec::Kind::Quantum:
      return m.field == QuantumField::Quaternion ? 2 * m.n : m.n;
    case ModelSpec::Kind::Spin:
      return 1 << (m.d / 2);
    case ModelSpec::Kind::DirectSum: {
      int total = 0;
      for (const ModelSpec& s : m.summands) total += embedding_dimension(s);
      return total;
    }
    case ModelSpec::Kind::Polyhedral:
      throw NotEmbeddableError(
          "build_embedding: polyhedral models have no catalog embedding; "
          "use decide_polyhedral");
  }
  return 0;
}

// Semantic effect map: the Hermitian image of one coordinate vector.
CMat phi_image(const ModelSpec& m, const Vec& a, const std::vector<CMat>* gammas) {
  switch (m.kind) {
    case ModelSpec::Kind::Classical: {
      CMat out(m.n, m.n);
      for (int i = 0; i < m.n; ++i) out(i, i) = a[i];
      return out;
    }
    case ModelSpec::Kind::Quantum:
      switch (m.field) {
        case QuantumField::Complex:
          return coords_to_herm(m.n, a);
        case QuantumField::Real:
          return coords_to_sym(m.n, a);
        case QuantumField::Quaternion:
          return complexify(coords_to_qherm(m.n, a));
      }
      return {};
    case ModelSpec::Kind::Spin: {
      const int size = 1 << (m.d / 2);
      CMat out(size, size);
      for (int i = 0; i < size; ++i) out(i, i) = a[0];
      for (int g = 0; g < m.d; ++g) {
        if (a[g + 1] == 0.0) continue;
        out += cplx(a[g + 1]) * (*gammas)[g];
      }
      return out;
    }
    default:
      throw std::logic_error("phi_image: unsupported kind");
  }
}

// State map scaling relative to phi: chosen so tr(psi(w)) = (w, u).
double psi_scale(const ModelSpec& m) {
  switch (m.kind) {
    case ModelSpec::Kind::Quantum:
      return m.field == QuantumField::Quaternion ? 0.5 : 1.0;
    case ModelSpec::Kind::Spin:
      return 1.0 / static_cast<double>(1 << (m.d / 2));
    default:
      return 1.0;
  }
}

void build_maps(const ModelSpec& m, int n, int block_offset, RMat& phi, RMat& psi,
                int coord_offset);

void build_leaf_maps(const ModelSpec& m, int n, int block_offset, RMat& phi, RMat& psi,
                     int coord_offset) {
  const int dim = ambient_dim(m);
  const int local = embedding_dimension(m);
  std::vector<CMat> gammas;
  if (m.kind == ModelSpec::Kind::Spin) gammas = gamma_matrices(m.d);
  const double state_scale = psi_scale(m);
  for (int a = 0; a < dim; ++a) {
    Vec basis(dim, 0.0);
    basis[a] = 1.0;
    CMat local_img = phi_image(m, basis, &gammas);
    CMat big(n, n);
    for (int i = 0; i < local; ++i)
      for (int j = 0; j < local; ++j) big(block_offset + i, block_offset + j) = local_img(i, j);
    Vec col = herm_to_coords(big);
    phi.set_column(coord_offset + a, col);
    psi.set_column(coord_offset + a, scale(state_scale, col));
  }
}

void build_maps(const ModelSpec& m, int n, int block_offset, RMat& phi, RMat& psi,
                int coord_offset) {
  if (m.kind == ModelSpec::Kind::DirectSum) {
    int block = block_offset;
    int coord = coord_offset;
    for (const ModelSpec& s : m.summands) {
      build_maps(s, n, block, phi, psi, coord);
      block += embedding_dimension(s);
      coord += ambient_dim(s);
    }
    return;
  }
  build_leaf_maps(m, n, block_offset, phi, psi, coord_offset);
}

}  // namespace

Embedding build_embedding(const ModelSpec& m) {
  const int n = embedding_dimension(m);
  const int dim = ambient_dim(m);
  Embedding e;
  e.model = m;
  e.n = n;
  e.phi.matrix = RMat(n * n, dim);
  e.psi.matrix = RMat(n * n, dim);
  build_maps(m, n, 0, e.phi.matrix, e.psi.matrix, 0);
  return e;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

namespace {

CMat random_psd(int n, Rng& rng) {
  CMat x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = cplx(rng.normal(), rng.normal());
  return x * x.adjoint();
}

}  // namespace

VerificationReport verify_embedding(const Embedding& e, int trials, double tol,
                                    std::uint64_t seed) {
  const ModelSpec& m = e.model;
  const int dim = ambient_dim(m);
  VerificationReport report;

  // (a) unitality: phi(u) = identity.
  Vec unit_img = e.phi.apply(unit_effect(m));
  Vec identity_coords = herm_to_coords(CMat::identity(e.n));
  report.add_residual("unitality", norm2(sub(unit_img, identity_coords)), tol);

  // (b) positivity of phi and psi on samples and extremal generators.
  double worst_pos = 0.0;
  std::string pos_witness;
  auto check_pos = [&](const CMat& img, const std::string& label) {
    double viol = std::max(0.0, -min_eigenvalue(img));
    if (viol > worst_pos) {
      worst_pos = viol;
      pos_witness = label;
    }
  };
  for (const Vec& g : extremal_effect_generators(m)) {
    check_pos(e.phi_matrix(g), "phi on extremal generator");
  }
  for (const Vec& g : extreme_normalized_states(m)) {
    check_pos(e.psi_matrix(g), "psi on extreme state");
  }
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    check_pos(e.phi_matrix(sample_effect(m, rng)), "phi on sampled effect");
    check_pos(e.psi_matrix(sample_state(m, rng)), "psi on sampled state");
  }
  report.add_residual("positivity", worst_pos, tol, pos_witness);

  // (c) probability preservation: (w, a) = tr(psi(w) phi(a)).
  double worst_prob = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed + 0x9E37, static_cast<std::uint64_t>(trial));
    Vec a = sample_effect(m, rng);
    Vec w = sample_state(m, rng);
    double direct = pairing(m, w, a);
    double embedded = hs_inner(e.psi_matrix(w), e.phi_matrix(a));
    worst_prob = std::max(worst_prob, std::abs(direct - embedded));
  }
  report.add_residual("probability_preservation", worst_prob, tol);

  // (d) psi* phi = identity on A.
  RMat left_inverse = e.psi.matrix.transpose() * e.phi.matrix;
  report.add_residual("left_inverse", (left_inverse - RMat::identity(dim)).frob_norm(), tol);

  // (e) normalization: tr(psi(w)) = 1 for normalized states.
  double worst_norm = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed + 0x51DE, static_cast<std::uint64_t>(trial));
    Vec w = sample_state(m, rng);
    worst_norm = std::max(worst_norm, std::abs(e.psi_matrix(w).trace().real() - 1.0));
  }
  report.add_residual("normalization", worst_norm, tol);

  // (f) the adjoints map quantum positives back into the model cones.
  double worst_adj = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed + 0xAD30, static_cast<std::uint64_t>(trial));
    Vec b = herm_to_coords(random_psd(e.n, rng));
    worst_adj = std::max(worst_adj, effect_violation(m, e.psi.apply_adjoint(b)));
    worst_adj = std::max(worst_adj, state_violation(m, e.phi.apply_adjoint(b)));
  }
  report.add_residual("adjoint_positivity", worst_adj, tol);

  return report;
}

// ---------------------------------------------------------------------------
// Minimality
// ---------------------------------------------------------------------------

namespace {

/// Uniform mixture over extreme states and a seeded spanning sample.
Vec barycenter_state(const ModelSpec& m, std::uint64_t seed) {
  std::vector<Vec> states = extreme_normalized_states(m);
  Rng rng(seed);
  const int extra = 2 * ambient_dim(m) + 4;
  for (int i = 0; i < extra; ++i) states.push_back(sample_state(m, rng));
  Vec mean(ambient_dim(m), 0.0);
  for (const Vec& s : states) mean = add(mean, s);
  return scale(1.0 / static_cast<double>(states.size()), mean);
}

}  // namespace

double barycenter_min_eigenvalue(const Embedding& e, std::uint64_t seed) {
  return min_eigenvalue(e.psi_matrix(barycenter_state(e.model, seed)));
}

bool is_minimal(const Embedding& e, double tol) {
  return barycenter_min_eigenvalue(e) > tol * std::max(1.0, static_cast<double>(e.n));
}

Embedding reduce_to_minimal(const Embedding& e, double tol) {
  {
    VerificationReport gate = verify_embedding(e, 32, std::max(tol, 1e-9), 7);
    if (!gate.all_pass()) {
      throw std::invalid_argument("reduce_to_minimal: input fails embedding verification");
    }
  }
  Embedding current = e;
  for (int round = 0; round < e.n + 1; ++round) {
    CMat sigma = current.psi_matrix(barycenter_state(current.model, 2026 + round));
    const double cutoff = 1e-9 * std::max(sigma.trace().real(), 1e-12);
    CMat iso = support_isometry(sigma, cutoff);
    const int support_dim = iso.cols();
    if (support_dim == current.n) return current;

    // Conjugate both maps by the support isometry, column by column.
    const int dim = ambient_dim(current.model);
    Embedding next;
    next.model = current.model;
    next.n = support_dim;
    next.phi.matrix = RMat(support_dim * support_dim, dim);
    next.psi.matrix = RMat(support_dim * support_dim, dim);
    for (int a = 0; a < dim; ++a) {
      Vec basis(dim, 0.0);
      basis[a] = 1.0;
      CMat phi_img = iso.adjoint() * current.phi_matrix(basis) * iso;
      CMat psi_img = iso.adjoint() * current.psi_matrix(basis) * iso;
      next.phi.matrix.set_column(a, herm_to_coords(phi_img));
      next.psi.matrix.set_column(a, herm_to_coords(psi_img));
    }
    current = next;
  }
  return current;
}

Embedding pad_embedding(const Embedding& e, int extra) {
  if (extra < 1) throw std::invalid_argument("pad_embedding: extra must be >= 1");
  const int dim = ambient_dim(e.model);
  const int n = e.n + extra;
  Embedding padded;
  padded.model = e.model;
  padded.n = n;
  padded.phi.matrix = RMat(n * n, dim);
  padded.psi.matrix = RMat(n * n, dim);
  for (int a = 0; a < dim; ++a) {
    Vec basis(dim, 0.0);
    basis[a] = 1.0;
    CMat phi_img = e.phi_matrix(basis);
    CMat psi_img = e.psi_matrix(basis);
    // Extra block: normalized trace functional keeps phi unital and positive.
    double trace_share = phi_img.trace().real() / static_cast<double>(e.n);
    CMat phi_big(n, n);
    CMat psi_big(n, n);
    for (int i = 0; i < e.n; ++i)
      for (int j = 0; j < e.n; ++j) {
        phi_big(i, j) = phi_img(i, j);
        psi_big(i, j) = psi_img(i, j);
      }
    for (int i = e.n; i < n; ++i) phi_big(i, i) = trace_share;
    padded.phi.matrix.set_column(a, herm_to_coords(phi_big));
    padded.psi.matrix.set_column(a, herm_to_coords(psi_big));
  }
  return padded;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

nlohmann::json embedding_to_json(const Embedding& e) {
  nlohmann::json j;
  j["model"] = model_to_json(e.model);
  j["n"] = e.n;
  auto matrix_json = [](const RMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int jx = 0; jx < m.cols(); ++jx) row.push_back(m(i, jx));
      rows.push_back(row);
    }
    return rows;
  };
  j["phi"] = matrix_json(e.phi.matrix);
  j["psi"] = matrix_json(e.psi.matrix);
  return j;
}

Embedding embedding_from_json(const nlohmann::json& j) {
  Embedding e;
  if (!j.is_object() || !j.contains("model") || !j.contains("n") || !j.contains("phi") ||
      !j.contains("psi")) {
    throw std::invalid_argument("embedding: expected fields model, n, phi, psi");
  }
  e.model = model_from_json(j.at("model"));
  e.n = j.at("n").get<int>();
  auto matrix_from = [&](const nlohmann::json& rows, const char* key) {
    if (!rows.is_array() || rows.empty()) {
      throw std::invalid_argument(std::string("embedding: field \"") + key +
                                  "\" must be a matrix");
    }
    RMat m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i) {
      const nlohmann::json& row = rows.at(i);
      if (static_cast<int>(row.size()) != m.cols()) {
        throw std::invalid_argument(std::string("embedding: ragged matrix in \"") + key + "\"");
      }
      for (int c = 0; c < m.cols(); ++c) m(i, c) = row.at(c).get<double>();
    }
    return m;
  };
  e.phi.matrix = matrix_from(j.at("phi"), "phi");
  e.psi.matrix = matrix_from(j.at("psi"), "psi");
  const int dim = ambient_dim(e.model);
  if (e.phi.matrix.rows() != e.n * e.n || e.phi.matrix.cols() != dim ||
      e.psi.matrix.rows() != e.n * e.n || e.psi.matrix.cols() != dim) {
    throw std::invalid_argument("embedding: matrix shape does not match model and n");
  }
  return e;
}

}  // namespace qembed
