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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qembed/projector.hpp"

using namespace qembed;

namespace {

CMat pauli(char which) {
  CMat m(2, 2);
  switch (which) {
    case 'x':
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 'y':
      m(0, 1) = cplx(0.0, -1.0);
      m(1, 0) = cplx(0.0, 1.0);
      break;
    default:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
  }
  return m;
}

HermitianMap projector_for(const ModelSpec& m) {
  return projector_from_embedding(build_embedding(m));
}

}  // namespace

TEST_SUITE("projector") {
  TEST_CASE("classical projector is the pinching onto the diagonal") {
    HermitianMap p = projector_for(ModelSpec::classical(3));
    Rng rng(1);
    Vec coords(9);
    for (double& c : coords) c = rng.normal();
    CMat x = coords_to_herm(3, coords);
    CMat px = p.apply(x);
    for (int i = 0; i < 3; ++i) {
      CHECK(px(i, i).real() == doctest::Approx(x(i, i).real()));
      for (int j = 0; j < 3; ++j) {
        if (i != j) CHECK(std::abs(px(i, j)) < 1e-14);
      }
    }
  }

  TEST_CASE("real-quantum projector takes the entrywise real part") {
    HermitianMap p = projector_for(ModelSpec::quantum(QuantumField::Real, 2));
    CMat px = p.apply(pauli('x'));
    CHECK((px - pauli('x')).max_abs() < 1e-14);  // sigma_x is real, fixed
    CMat py = p.apply(pauli('y'));
    CHECK(py.max_abs() < 1e-14);  // sigma_y is purely imaginary, killed
    Rng rng(2);
    Vec coords(4);
    for (double& c : coords) c = rng.normal();
    CMat x = coords_to_herm(2, coords);
    CMat expected = 0.5 * (x + x.conjugate());
    CHECK((p.apply(x) - expected).max_abs() < 1e-13);
  }

  TEST_CASE("spin(3) projector is the identity on Hermitian(2)") {
    HermitianMap p = projector_for(ModelSpec::spin(3));
    CHECK((p.matrix - RMat::identity(4)).max_abs() < 1e-12);
  }

  TEST_CASE("projector properties hold over the catalog") {
    std::vector<ModelSpec> models = {
        ModelSpec::classical(3),
        ModelSpec::quantum(QuantumField::Complex, 2),
        ModelSpec::quantum(QuantumField::Real, 2),
        ModelSpec::quantum(QuantumField::Quaternion, 2),
        ModelSpec::spin(4),
        ModelSpec::direct_sum({ModelSpec::classical(2), ModelSpec::spin(2)}),
    };
    for (const ModelSpec& m : models) {
      CAPTURE(m.name());
      Embedding e = build_embedding(m);
      HermitianMap p = projector_from_embedding(e);
      VerificationReport report = check_projector(p, e, 100, 1e-9, 42);
      CHECK(report.all_pass());
      CHECK(report.max_residual() < 1e-9);

      // the adjoint projector fixes psi-images of states
      HermitianMap padj = adjoint_map(p);
      Rng rng(5);
      Vec w = e.psi.apply(sample_state(m, rng));
      CHECK(norm2(sub(padj.apply_coords(w), w)) < 1e-10);
    }
  }

  TEST_CASE("projector_from_embedding rejects corrupted embeddings") {
    Embedding e = build_embedding(ModelSpec::classical(2));
    e.phi.matrix *= 1.01;
    CHECK_THROWS_AS(projector_from_embedding(e), std::invalid_argument);
  }

  TEST_CASE("conditional expectation property on reduced embeddings") {
    std::vector<ModelSpec> models = {
        ModelSpec::classical(3),
        ModelSpec::quantum(QuantumField::Real, 2),
        ModelSpec::quantum(QuantumField::Quaternion, 2),
        ModelSpec::spin(4),
    };
    for (const ModelSpec& m : models) {
      CAPTURE(m.name());
      Embedding e = reduce_to_minimal(build_embedding(m), 1e-9);
      HermitianMap p = projector_from_embedding(e);
      VerificationReport report = check_conditional_expectation(p, e, 200, 1e-9, 42);
      CHECK(report.all_pass());
    }
  }

  TEST_CASE("non-minimal embeddings are flagged as requiring reduction") {
    Embedding padded = pad_embedding(build_embedding(ModelSpec::classical(2)), 1);
    HermitianMap p = projector_from_embedding(padded);
    VerificationReport report = check_conditional_expectation(p, padded, 20, 1e-9, 42);
    const CheckResult* flag = report.find("minimality");
    REQUIRE(flag != nullptr);
    CHECK_FALSE(flag->pass);
    CHECK(flag->witness.find("reduce_to_minimal") != std::string::npos);
  }

  TEST_CASE("Kadison inequality: hand cases under the real projection") {
    HermitianMap p = projector_for(ModelSpec::quantum(QuantumField::Real, 2));
    // z = sigma_x is fixed: P(z^2) - P(z)^2 = 0
    CMat gx = p.apply(pauli('x') * pauli('x')) - p.apply(pauli('x')) * p.apply(pauli('x'));
    CHECK(gx.max_abs() < 1e-13);
    // z = sigma_y is killed: P(z^2) - P(z)^2 = I >= 0
    CMat gy = p.apply(pauli('y') * pauli('y')) - p.apply(pauli('y')) * p.apply(pauli('y'));
    CHECK((gy - CMat::identity(2)).max_abs() < 1e-13);
  }

  TEST_CASE("Kadison inequality holds for every catalog projector") {
    std::vector<ModelSpec> models = {
        ModelSpec::classical(3),
        ModelSpec::quantum(QuantumField::Real, 3),
        ModelSpec::quantum(QuantumField::Quaternion, 2),
        ModelSpec::spin(5),
        ModelSpec::direct_sum({ModelSpec::classical(2), ModelSpec::spin(3)}),
    };
    for (const ModelSpec& m : models) {
      CAPTURE(m.name());
      HermitianMap p = projector_for(m);
      VerificationReport report = check_kadison_inequality(p, 200, 1e-9, 42);
      CHECK(report.all_pass());
    }
  }

  TEST_CASE("cone of squares: pinching sends |+><+| to a diagonal square") {
    Embedding e = build_embedding(ModelSpec::classical(2));
    HermitianMap p = projector_from_embedding(e);
    CMat plus(2, 2);
    plus(0, 0) = 0.5;
    plus(0, 1) = 0.5;
    plus(1, 0) = 0.5;
    plus(1, 1) = 0.5;
    CMat image = p.apply(plus);
    CHECK((image - 0.5 * CMat::identity(2)).max_abs() < 1e-14);
    CMat root = sqrt_psd(image);
    // the root I/sqrt(2) is itself diagonal, i.e. inside the embedded algebra
    CHECK(std::abs(root(0, 0).real() - std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(root(0, 1)) < 1e-12);

    VerificationReport report = check_cone_of_squares(p, e, 200, 1e-9, 42);
    CHECK(report.all_pass());
  }

  TEST_CASE("cone of squares holds on reduced catalog embeddings") {
    std::vector<ModelSpec> models = {
        ModelSpec::quantum(QuantumField::Real, 2),
        ModelSpec::quantum(QuantumField::Quaternion, 2),
        ModelSpec::spin(4),
        ModelSpec::direct_sum({ModelSpec::classical(2), ModelSpec::spin(2)}),
    };
    for (const ModelSpec& m : models) {
      CAPTURE(m.name());
      Embedding e = reduce_to_minimal(build_embedding(m), 1e-9);
      HermitianMap p = projector_from_embedding(e);
      VerificationReport report = check_cone_of_squares(p, e, 200, 1e-9, 42);
      CHECK(report.all_pass());
    }
  }

  TEST_CASE("Choi spectra of the three reference maps on Q2") {
    // pinching: eigenvalues {0, 0, 1, 1}
    {
      HermitianMap p = projector_for(ModelSpec::classical(2));
      auto ev = herm_eigenvalues(choi_matrix(p));
      CHECK(ev[0] == doctest::Approx(0.0));
      CHECK(ev[1] == doctest::Approx(0.0));
      CHECK(ev[2] == doctest::Approx(1.0));
      CHECK(ev[3] == doctest::Approx(1.0));
      CHECK(is_completely_positive(p, 1e-9).first);
    }
    // real projection: eigenvalues {-1/2, 1/2, 1/2, 3/2}
    {
      HermitianMap p = projector_for(ModelSpec::quantum(QuantumField::Real, 2));
      auto ev = herm_eigenvalues(choi_matrix(p));
      CHECK(ev[0] == doctest::Approx(-0.5));
      CHECK(ev[1] == doctest::Approx(0.5));
      CHECK(ev[2] == doctest::Approx(0.5));
      CHECK(ev[3] == doctest::Approx(1.5));
      auto [cp, witness] = is_completely_positive(p, 1e-9);
      CHECK_FALSE(cp);
      CHECK(witness == doctest::Approx(-0.5));
    }
    // identity map: rank one, eigenvalues {2, 0, 0, 0}
    {
      HermitianMap p = projector_for(ModelSpec::quantum(QuantumField::Complex, 2));
      auto ev = herm_eigenvalues(choi_matrix(p));
      CHECK(ev[0] == doctest::Approx(0.0));
      CHECK(ev[1] == doctest::Approx(0.0));
      CHECK(ev[2] == doctest::Approx(0.0));
      CHECK(ev[3] == doctest::Approx(2.0));
      CHECK(is_completely_positive(p, 1e-9).first);
    }
  }

  TEST_CASE("Choi trace equals the quantum dimension for unital maps") {
    for (const ModelSpec& m :
         {ModelSpec::spin(4), ModelSpec::quantum(QuantumField::Quaternion, 2)}) {
      HermitianMap p = projector_for(m);
      CMat choi = choi_matrix(p);
      CHECK(choi.trace().real() == doctest::Approx(p.n));
      CHECK(is_hermitian(choi));
    }
  }

  TEST_CASE("decoherence classification over the catalog") {
    // physical: classical, complex quantum, superselection sums, spin(3)
    {
      DecoherenceClassification r =
          classify_decoherence(build_embedding(ModelSpec::classical(3)), 1e-9);
      CHECK(r.physical);
      CHECK(r.block_sizes == std::vector<int>{1, 1, 1});
    }
    {
      DecoherenceClassification r = classify_decoherence(
          build_embedding(ModelSpec::quantum(QuantumField::Complex, 3)), 1e-9);
      CHECK(r.physical);
      CHECK(r.block_sizes == std::vector<int>{3});
    }
    {
      DecoherenceClassification r = classify_decoherence(
          build_embedding(ModelSpec::direct_sum(
              {ModelSpec::quantum(QuantumField::Complex, 2), ModelSpec::classical(2)})),
          1e-9);
      CHECK(r.physical);
      CHECK(r.block_sizes == std::vector<int>{2, 1, 1});
    }
    {
      DecoherenceClassification r =
          classify_decoherence(build_embedding(ModelSpec::spin(3)), 1e-9);
      CHECK(r.physical);
      CHECK(r.block_sizes == std::vector<int>{2});
    }
    // not physical: real and quaternionic quantum, other spin factors
    {
      DecoherenceClassification r = classify_decoherence(
          build_embedding(ModelSpec::quantum(QuantumField::Real, 2)), 1e-9);
      CHECK_FALSE(r.physical);
      CHECK(r.min_choi_eigenvalue == doctest::Approx(-0.5));
    }
    for (const ModelSpec& m : {ModelSpec::quantum(QuantumField::Quaternion, 2),
                               ModelSpec::quantum(QuantumField::Real, 3),
                               ModelSpec::spin(2), ModelSpec::spin(4)}) {
      CAPTURE(m.name());
      DecoherenceClassification r = classify_decoherence(build_embedding(m), 1e-9);
      CHECK_FALSE(r.physical);
      CHECK(r.min_choi_eigenvalue < -0.1);
    }
  }

  TEST_CASE("classification requires a minimal embedding") {
    Embedding padded = pad_embedding(build_embedding(ModelSpec::classical(2)), 1);
    CHECK_THROWS_AS(classify_decoherence(padded, 1e-9), std::invalid_argument);
  }

  TEST_CASE("choi JSON export is row-major with real/imag pairs") {
    HermitianMap p = projector_for(ModelSpec::classical(2));
    nlohmann::json j = choi_to_json(choi_matrix(p));
    CHECK(j["size"] == 4);
    CHECK(j["entries"].size() == 16);
    CHECK(j["entries"][0][0] == doctest::Approx(1.0));  // (0,0) entry, real part
    CHECK(j["entries"][0][1] == doctest::Approx(0.0));
  }
}
