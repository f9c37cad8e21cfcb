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

#include <stdexcept>

#include "qembed/jordan.hpp"
#include "qembed/model.hpp"
#include "qembed/report.hpp"

namespace qembed {

/// Raised by build_embedding for models outside the constructive catalog;
/// polyhedral cones are handled by the polyhedral decision procedure instead.
struct NotEmbeddableError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Real-linear map between coordinate spaces. Coordinates are isometric, so
/// the adjoint is the plain transpose.
struct LinearMap {
  RMat matrix;  // target_dim x source_dim

  int source_dim() const { return matrix.cols(); }
  int target_dim() const { return matrix.rows(); }

  Vec apply(const Vec& x) const { return matrix.apply(x); }
  Vec apply_adjoint(const Vec& y) const { return matrix.apply_transposed(y); }
};

/// An embedding of a model into n-level complex quantum theory: phi maps
/// effect coordinates and psi maps state coordinates into Hermitian(n)
/// coordinates, with psi* phi = id and all probabilities preserved.
struct Embedding {
  ModelSpec model;
  int n = 0;
  LinearMap phi;
  LinearMap psi;

  CMat phi_matrix(const Vec& effect) const { return coords_to_herm(n, phi.apply(effect)); }
  CMat psi_matrix(const Vec& state) const { return coords_to_herm(n, psi.apply(state)); }
};

/// Gamma matrices of size 2^floor(d/2): Hermitian, traceless, squaring to the
/// identity and pairwise anticommuting. Built by the tensor recursion
/// gamma_{2k-1} = sz^(k-1) (x) sx (x) 1..., gamma_{2k} = sz^(k-1) (x) sy (x) 1...,
/// plus gamma_d = sz^m for odd d.
std::vector<CMat> gamma_matrices(int d);

/// Explicit embedding for every catalog model:
///  - classical(n) -> Q_n, diagonal matrices;
///  - quantum(C, n) -> Q_n, identity;
///  - quantum(R, n) -> Q_n, inclusion of symmetric matrices;
///  - quantum(H, n) -> Q_2n, symplectic representation (psi halved);
///  - spin(d) -> Q_{2^floor(d/2)} via gamma matrices;
///  - direct sums -> block diagonal.
/// Throws NotEmbeddableError on polyhedral input.
Embedding build_embedding(const ModelSpec& m);

/// Runs the six defining checks over seeded trials:
///  unitality, positivity of phi/psi (samples and extremal generators),
///  probability preservation, psi* phi = id, preservation of normalization,
///  and positivity of the adjoint maps.
VerificationReport verify_embedding(const Embedding& e, int trials, double tol,
                                    std::uint64_t seed);

/// Smallest eigenvalue of the embedded barycenter state; positive iff the
/// embedding is minimal.
double barycenter_min_eigenvalue(const Embedding& e, std::uint64_t seed = 2026);

bool is_minimal(const Embedding& e, double tol);

/// Restricts the embedding to the support of an embedded spanning-mixture
/// state, repeating until that state has full rank. The output acts on the
/// smallest admissible quantum dimension and passes verify_embedding again.
Embedding reduce_to_minimal(const Embedding& e, double tol);

/// Inflates a valid embedding into extra unused quantum dimensions. The added
/// block carries the normalized trace functional on phi and zero on psi, so
/// the result still satisfies every embedding axiom but is no longer minimal.
/// Fixture for exercising reduce_to_minimal.
Embedding pad_embedding(const Embedding& e, int extra);

nlohmann::json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

}  // namespace qembed
