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

#include "qembed/embedding.hpp"
#include "qembed/model.hpp"
#include "qembed/report.hpp"

namespace qembed {

/// Outcome of the polyhedral embeddability decision. A polyhedral model embeds
/// into quantum (equivalently classical) theory exactly when its cone is
/// simplicial; the witness either exhibits the order isomorphism onto a
/// classical model or the minimal extreme-ray family that rules one out.
struct Decision {
  enum class Verdict { ClassicalIsomorphic, NotQuantumEmbeddable, Unknown };

  Verdict verdict = Verdict::Unknown;
  int n = 0;                      // classical outcome count when isomorphic
  RMat iso;                       // maps scaled rays to the standard basis
  double witness_residual = 0.0;  // max |iso * scaled_ray - delta| over rays
  std::vector<Vec> minimal_rays;  // irredundant extreme rays

  nlohmann::json to_json() const;
};

/// Decides classical embeddability of a polyhedral model: prunes redundant
/// rays by nonnegative least squares, then tests whether the remaining count
/// equals the dimension with independent rays.
Decision decide_polyhedral(const ModelSpec& poly, double tol);

/// The positive unital effect map from the gbit onto classical(4) given by
/// evaluation on the four corner states; its image satisfies
/// x1 + x2 = x3 + x4. The report verifies positivity, unitality, and the
/// image equation on sampled effects.
std::pair<LinearMap, VerificationReport> holevo_map(int trials = 200, double tol = 1e-10,
                                                    std::uint64_t seed = 42);

struct DistinguisherWitness {
  int corner_a = 0;
  int corner_b = 0;
  Vec effect;        // pairing 1 on corner_a and 0 on corner_b
  double value_a = 0.0;
  double value_b = 0.0;
};

/// Machine-checkable record of why no linear state map can accompany the
/// Holevo effect map: the four corner states are pairwise distinguishable, so
/// any probability-preserving state map must hit the four deterministic
/// distributions, whose affine rank exceeds that of the square.
struct GbitCertificate {
  std::vector<Vec> corners;                        // the four corner states
  std::vector<DistinguisherWitness> distinguishers;  // one per corner pair
  int distinct_witness_effects = 0;
  int state_space_affine_rank = 0;    // affine rank of the square (2)
  int classical_target_affine_rank = 0;  // affine rank of the 4 deterministic
                                         // distributions in classical(4) (3)
  std::string conclusion;

  bool valid() const;
  nlohmann::json to_json() const;
};

GbitCertificate gbit_nonembeddability_certificate(double tol);

/// Affine rank of a point family (rank of differences against the first).
int affine_rank(const std::vector<Vec>& points, double tol);

}  // namespace qembed
