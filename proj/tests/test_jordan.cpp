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

#include <cmath>

#include "doctest.h"
#include "qembed/jordan.hpp"

using namespace qembed;

namespace {

const std::vector<ModelSpec>& axiom_models() {
  static const std::vector<ModelSpec> models = {
      ModelSpec::classical(4),
      ModelSpec::quantum(QuantumField::Complex, 3),
      ModelSpec::quantum(QuantumField::Real, 3),
      ModelSpec::quantum(QuantumField::Quaternion, 2),
      ModelSpec::spin(2),
      ModelSpec::spin(5),
      ModelSpec::direct_sum({ModelSpec::classical(2), ModelSpec::spin(3)}),
  };
  return models;
}

Vec pauli_coords(int which) {
  // coordinates of sigma_x, sigma_y, sigma_z in quantum(C, 2)
  CMat m(2, 2);
  switch (which) {
    case 0:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 1:
      m(0, 1) = cplx(0.0, -1.0);
      m(1, 0) = cplx(0.0, 1.0);
      break;
    default:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
  }
  return herm_to_coords(m);
}

}  // namespace

TEST_SUITE("jordan") {
  TEST_CASE("classical product is entrywise") {
    ModelSpec c2 = ModelSpec::classical(2);
    Vec z = jordan_product(c2, {1.0, 2.0}, {3.0, 4.0});
    CHECK(z == Vec{3.0, 8.0});
    CHECK(jordan_unit(c2) == Vec{1.0, 1.0});
  }

  TEST_CASE("anticommuting Paulis multiply to zero") {
    ModelSpec qc2 = ModelSpec::quantum(QuantumField::Complex, 2);
    Vec z = jordan_product(qc2, pauli_coords(0), pauli_coords(1));
    CHECK(norm2(z) < 1e-14);
  }

  TEST_CASE("spin product formula") {
    ModelSpec s2 = ModelSpec::spin(2);
    Vec z = jordan_product(s2, {1.0, 1.0, 0.0}, {1.0, 1.0, 0.0});
    CHECK(z[0] == doctest::Approx(2.0));
    CHECK(z[1] == doctest::Approx(2.0));
    CHECK(z[2] == doctest::Approx(0.0));

    // unit element
    Vec u = jordan_unit(ModelSpec::spin(4));
    Rng rng(3);
    Vec x = random_element(ModelSpec::spin(4), rng);
    CHECK(norm2(sub(jordan_product(ModelSpec::spin(4), u, x), x)) < 1e-12);
  }

  TEST_CASE("unit element acts trivially on every catalog model") {
    for (const ModelSpec& m : axiom_models()) {
      Vec u = jordan_unit(m);
      CHECK(norm2(sub(u, unit_effect(m))) == doctest::Approx(0.0));
      for (int trial = 0; trial < 20; ++trial) {
        Rng rng = trial_rng(50, trial);
        Vec x = random_element(m, rng);
        CHECK(norm2(sub(jordan_product(m, u, x), x)) <= 1e-10);
      }
    }
  }

  TEST_CASE("polyhedral models are rejected") {
    ModelSpec gbit = gbit_model();
    Vec v(3, 0.0);
    CHECK_THROWS_AS(jordan_product(gbit, v, v), UnsupportedStructureError);
    CHECK_THROWS_AS(jordan_unit(gbit), UnsupportedStructureError);
    CHECK_THROWS_AS(check_jordan_axioms(gbit, 1, 1e-9, 1), UnsupportedStructureError);
  }

  TEST_CASE("squares and square roots") {
    ModelSpec c2 = ModelSpec::classical(2);
    CHECK(jordan_square(c2, {-1.0, 2.0}) == Vec{1.0, 4.0});
    CHECK(is_square_cone_member(c2, {1.0, 4.0}, 1e-9));
    CHECK_FALSE(is_square_cone_member(c2, {1.0, -0.1}, 1e-9));

    ModelSpec qc2 = ModelSpec::quantum(QuantumField::Complex, 2);
    Vec sz2 = jordan_square(qc2, pauli_coords(2));
    CHECK(norm2(sub(sz2, herm_to_coords(CMat::identity(2)))) < 1e-14);
    CHECK(is_square_cone_member(qc2, sz2, 1e-9));

    // spin(3): (1, (0,0,1)) is the square of (sqrt2/2)(1, (0,0,1))
    ModelSpec s3 = ModelSpec::spin(3);
    auto root = jordan_sqrt(s3, {1.0, 0.0, 0.0, 1.0}, 1e-9);
    REQUIRE(root.has_value());
    const double half_sqrt2 = std::sqrt(2.0) / 2.0;
    CHECK((*root)[0] == doctest::Approx(half_sqrt2));
    CHECK((*root)[3] == doctest::Approx(half_sqrt2));
    CHECK(norm2(sub(jordan_square(s3, *root), {1.0, 0.0, 0.0, 1.0})) < 1e-12);
  }

  TEST_CASE("cone of squares equals the positive cone") {
    for (const ModelSpec& m : axiom_models()) {
      for (int trial = 0; trial < 200; ++trial) {
        Rng rng = trial_rng(700, trial);
        // squares land in the effect cone
        Vec sq = jordan_square(m, random_element(m, rng));
        CHECK(contains_effect(m, sq, 1e-9));
        CHECK(is_square_cone_member(m, sq, 1e-9));
        // sampled effects admit square roots that square back
        Vec e = sample_effect(m, rng);
        auto root = jordan_sqrt(m, e, 1e-9);
        REQUIRE(root.has_value());
        CHECK(norm2(sub(jordan_square(m, *root), e)) <=
              1e-8 * std::max(1.0, norm2(e)));
      }
      // agreement on non-members
      for (int trial = 0; trial < 200; ++trial) {
        Rng rng = trial_rng(701, trial);
        Vec v = random_element(m, rng);
        CHECK(is_square_cone_member(m, v, 1e-9) == contains_effect(m, v, 1e-9));
      }
    }
  }

  TEST_CASE("axiom suite passes on the catalog") {
    for (const ModelSpec& m : axiom_models()) {
      VerificationReport report = check_jordan_axioms(m, 100, 1e-9, 42);
      CHECK(report.all_pass());
      CHECK(report.max_residual() < 1e-10);
    }
  }

  TEST_CASE("quaternionic product agrees with the symplectic representation") {
    ModelSpec qh = ModelSpec::quantum(QuantumField::Quaternion, 2);
    for (int trial = 0; trial < 50; ++trial) {
      Rng rng = trial_rng(800, trial);
      Vec x = random_element(qh, rng);
      Vec y = random_element(qh, rng);
      Vec z = jordan_product(qh, x, y);
      CMat cx = complexify(coords_to_qherm(2, x));
      CMat cy = complexify(coords_to_qherm(2, y));
      CMat expected = 0.5 * (cx * cy + cy * cx);
      CHECK((complexify(coords_to_qherm(2, z)) - expected).frob_norm() < 1e-10);
    }
  }
}
