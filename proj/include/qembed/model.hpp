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

#include <string>
#include <vector>

#include "json.hpp"
#include "qembed/linalg.hpp"
#include "qembed/quaternion.hpp"
#include "qembed/rng.hpp"

namespace qembed {

enum class QuantumField { Real, Complex, Quaternion };

/// A probabilistic model: an ordered vector space (A, A+, u) given either as a
/// catalog entry (classical, quantum over R/C/H, spin factor, direct sum) or
/// as an explicit polyhedral cone.
///
/// Catalog models use isometric real coordinates chosen so that the pairing
/// between states and effects is the plain dot product:
///  - classical(n): R^n;
///  - quantum(F, n): diagonal entries, then each off-diagonal component
///    scaled by sqrt(2) (real/imag for C, four quaternion components for H);
///  - spin(d): (t, x) in R + R^d.
struct ModelSpec {
  enum class Kind { Classical, Quantum, Spin, DirectSum, Polyhedral };

  Kind kind = Kind::Classical;
  int n = 1;                        // Classical outcomes / Quantum matrix size
  QuantumField field = QuantumField::Complex;
  int d = 2;                        // Spin ball dimension
  std::vector<ModelSpec> summands;  // DirectSum components
  int poly_dim = 0;
  Vec poly_unit;
  std::vector<Vec> poly_rays;       // extreme effects, generating and pointed

  static ModelSpec classical(int n);
  static ModelSpec quantum(QuantumField field, int n);
  /// d >= 2; spin(1) is order-isomorphic to classical(2) and is normalized
  /// to it here.
  static ModelSpec spin(int d);
  static ModelSpec direct_sum(std::vector<ModelSpec> summands);
  static ModelSpec polyhedral(int dim, Vec unit, std::vector<Vec> extreme_effects);

  /// True for every model built from catalog constructors (recursively).
  bool is_catalog() const;
  std::string name() const;
};

/// The square-state-space model: dim 3, unit (1,0,0), four extreme effects
/// (1/2)(1, +-1, 0) and (1/2)(1, 0, +-1).
ModelSpec gbit_model();

int ambient_dim(const ModelSpec& m);
Vec unit_effect(const ModelSpec& m);

/// Coordinate (offset, length) of each summand's block. DirectSum only.
std::vector<std::pair<int, int>> summand_ranges(const ModelSpec& m);

/// Cone violation measures: 0 inside the cone, positive outside. Membership at
/// tolerance tol is violation <= tol.
double effect_violation(const ModelSpec& m, const Vec& e);
double state_violation(const ModelSpec& m, const Vec& w);

bool contains_effect(const ModelSpec& m, const Vec& e, double tol);
bool contains_state(const ModelSpec& m, const Vec& w, double tol);

/// Probability pairing (w, e). Both arguments use the model coordinates, in
/// which this is the dot product (Hilbert-Schmidt trace for quantum kinds).
double pairing(const ModelSpec& m, const Vec& state, const Vec& effect);

/// Gaussian ambient vector (a generic algebra element, not necessarily in
/// either cone).
Vec random_element(const ModelSpec& m, Rng& rng);

/// Effect sampler: Jordan squares for catalog models, nonnegative ray
/// combinations for polyhedral ones. Samples pass contains_effect at ~1e-12.
Vec sample_effect(const ModelSpec& m, Rng& rng);

/// Normalized state sampler: random convex combinations of extreme states.
Vec sample_state(const ModelSpec& m, Rng& rng);

/// Finite generating family of extreme rays of the effect cone.
std::vector<Vec> extremal_effect_generators(const ModelSpec& m);

/// Finite spanning family of extreme normalized states. For polyhedral models
/// this enumerates the dual cone's extreme rays exactly.
std::vector<Vec> extreme_normalized_states(const ModelSpec& m);

// --- coordinatization ------------------------------------------------------

Vec herm_to_coords(const CMat& m);
CMat coords_to_herm(int n, const Vec& v);
Vec sym_to_coords(const CMat& m);
CMat coords_to_sym(int n, const Vec& v);
Vec qherm_to_coords(const QMat& m);
QMat coords_to_qherm(int n, const Vec& v);

// --- JSON model files ------------------------------------------------------

/// Parses {"type": "classical"|"quantum"|"spin"|"direct_sum"|"polyhedral", ...}.
/// Field names are exact and case-sensitive. Throws std::invalid_argument with
/// the offending field on schema violations.
ModelSpec model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const ModelSpec& m);

}  // namespace qembed
