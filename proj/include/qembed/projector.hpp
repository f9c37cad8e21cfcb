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

#include <utility>

#include "qembed/embedding.hpp"

namespace qembed {

/// Linear map on Hermitian(n) expressed as a real matrix in the isometric
/// coordinates; Hermitian inputs map to Hermitian outputs by construction.
struct HermitianMap {
  int n = 0;
  RMat matrix;  // n^2 x n^2

  Vec apply_coords(const Vec& v) const { return matrix.apply(v); }
  CMat apply(const CMat& hermitian) const {
    return coords_to_herm(n, matrix.apply(herm_to_coords(hermitian)));
  }
  /// Complex-linear extension: X = H + iK with H, K Hermitian maps to
  /// P(H) + i P(K).
  CMat apply_complex(const CMat& x) const;
};

/// P = phi psi*, the positive unital projection of Hermitian(n) onto the
/// embedded effect space. Performs the cheap deterministic embedding checks
/// (unitality, psi* phi = id) and throws on a corrupted input.
HermitianMap projector_from_embedding(const Embedding& e);

/// P* = psi phi*, the projection onto the embedded states.
HermitianMap adjoint_map(const HermitianMap& p);

/// Defining projector properties: idempotence, unitality, positivity on
/// sampled PSD inputs, image(P) = phi(A), and the cone identity
/// P(B+) = phi(A) intersect B+ on spot checks.
VerificationReport check_projector(const HermitianMap& p, const Embedding& e, int trials,
                                   double tol, std::uint64_t seed);

/// Conditional-expectation property of minimal embeddings:
/// P(x o y) = x o P(y) for x in the image, P fixes squares from the image,
/// and the image is closed under o. Non-minimal embeddings are flagged.
VerificationReport check_conditional_expectation(const HermitianMap& p, const Embedding& e,
                                                 int trials, double tol, std::uint64_t seed);

/// Kadison's inequality P(z^2) >= P(z)^2 for positive unital P.
VerificationReport check_kadison_inequality(const HermitianMap& p, int trials, double tol,
                                            std::uint64_t seed);

/// The image of the positive cone equals the squares of the image:
/// (a) P(b) has a square root inside the image for PSD b, (b) squares from
/// the image are fixed, (c) the image cone is self-dual on spot checks.
VerificationReport check_cone_of_squares(const HermitianMap& p, const Embedding& e, int trials,
                                         double tol, std::uint64_t seed);

/// Choi matrix sum_ij E_ij (x) P(E_ij) of the complex-linear extension;
/// PSD exactly when P is completely positive.
CMat choi_matrix(const HermitianMap& p);

/// (verdict, smallest Choi eigenvalue); CP iff min eigenvalue >= -tol * n.
std::pair<bool, double> is_completely_positive(const HermitianMap& p, double tol);

struct DecoherenceClassification {
  bool physical = false;            // completely positive projector
  std::vector<int> block_sizes;     // matrix-algebra block structure when physical
  double min_choi_eigenvalue = 0.0; // negative witness when not physical
  VerificationReport details;
};

/// Decides whether the embedding's projector is a physical decoherence map
/// (completely positive). When it is, verifies that the image is closed under
/// the associative product and reports its block-diagonal structure.
/// Requires a minimal embedding.
DecoherenceClassification classify_decoherence(const Embedding& e, double tol);

nlohmann::json choi_to_json(const CMat& choi);

}  // namespace qembed
