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

#include <optional>
#include <stdexcept>

#include "qembed/model.hpp"
#include "qembed/report.hpp"

namespace qembed {

/// Raised when a Jordan operation is asked of a model without algebraic
/// structure (polyhedral cones).
struct UnsupportedStructureError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Commutative Jordan product in model coordinates.
///  - classical: entrywise product;
///  - quantum(F, n): symmetrized matrix product (x y + y x) / 2 over F;
///  - spin(d): (t, x) o (s, y) = (t s + x.y, t y + s x);
///  - direct sums: componentwise.
Vec jordan_product(const ModelSpec& m, const Vec& x, const Vec& y);

/// The unit element; coincides with the unit effect.
Vec jordan_unit(const ModelSpec& m);

Vec jordan_square(const ModelSpec& m, const Vec& x);

/// Square root within the algebra when v lies in the cone of squares
/// (spectral square root for matrix kinds, closed form for spin factors).
/// Returns nullopt when v is outside the cone beyond tol.
std::optional<Vec> jordan_sqrt(const ModelSpec& m, const Vec& v, double tol);

/// Cone-of-squares membership, decided by constructing a square root. Agrees
/// with contains_effect on every catalog model.
bool is_square_cone_member(const ModelSpec& m, const Vec& v, double tol);

/// Property checks on random elements: commutativity, the Jordan identity
/// (x o y) o x^2 = x o (y o x^2), the Euclidean compatibility
/// <x, z o y> = <z o x, y>, and the unit law.
VerificationReport check_jordan_axioms(const ModelSpec& m, int trials, double tol,
                                       std::uint64_t seed);

}  // namespace qembed
