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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits with the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qembed/decide.hpp"
#include "qembed/embedding.hpp"
#include "qembed/jordan.hpp"
#include "qembed/model.hpp"
#include "qembed/projector.hpp"

using namespace qembed;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& err) {
    detail = std::string("exception: ") + err.what();
  }
  std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

constexpr double kTol = 1e-9;
constexpr int kTrials = 200;
constexpr std::uint64_t kSeed = 42;

// Deterministic "random" direct sums drawn from the catalog.
ModelSpec random_direct_sum(Rng& rng) {
  std::vector<ModelSpec> pool = {
      ModelSpec::classical(1),
      ModelSpec::classical(2),
      ModelSpec::classical(3),
      ModelSpec::quantum(QuantumField::Complex, 2),
      ModelSpec::quantum(QuantumField::Real, 2),
      ModelSpec::quantum(QuantumField::Quaternion, 1),
      ModelSpec::spin(2),
      ModelSpec::spin(3),
      ModelSpec::spin(4),
  };
  int count = rng.uniform_int(2, 3);
  std::vector<ModelSpec> summands;
  for (int i = 0; i < count; ++i) {
    summands.push_back(pool[rng.uniform_int(0, static_cast<int>(pool.size()) - 1)]);
  }
  return ModelSpec::direct_sum(std::move(summands));
}

std::vector<ModelSpec> catalog_suite() {
  std::vector<ModelSpec> models;
  for (int n = 1; n <= 5; ++n) models.push_back(ModelSpec::classical(n));
  for (int n = 1; n <= 4; ++n) models.push_back(ModelSpec::quantum(QuantumField::Complex, n));
  for (int n = 2; n <= 3; ++n) models.push_back(ModelSpec::quantum(QuantumField::Real, n));
  for (int n = 1; n <= 2; ++n)
    models.push_back(ModelSpec::quantum(QuantumField::Quaternion, n));
  for (int d = 2; d <= 7; ++d) models.push_back(ModelSpec::spin(d));
  Rng rng(kSeed);
  for (int i = 0; i < 3; ++i) models.push_back(random_direct_sum(rng));
  return models;
}

ModelSpec standard_simplex(int dim) {
  std::vector<Vec> rays;
  for (int i = 0; i < dim; ++i) {
    Vec e(dim, 0.0);
    e[i] = 1.0;
    rays.push_back(e);
  }
  return ModelSpec::polyhedral(dim, Vec(dim, 1.0), rays);
}

ModelSpec pentagon_cone() {
  std::vector<Vec> rays;
  for (int k = 0; k < 5; ++k) {
    double angle = 2.0 * 3.14159265358979323846 * k / 5.0;
    rays.push_back({1.0, std::cos(angle), std::sin(angle)});
  }
  return ModelSpec::polyhedral(3, {1.0, 0.0, 0.0}, rays);
}

ModelSpec cube_cone() {
  std::vector<Vec> rays;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) rays.push_back({1.0, 1.0 * sx, 1.0 * sy, 1.0 * sz});
  return ModelSpec::polyhedral(4, {1.0, 0.0, 0.0, 0.0}, rays);
}

}  // namespace

int main() {
  std::vector<ModelSpec> suite = catalog_suite();

  criterion("catalog embedding suite: all six checks at 1e-9 over 200 trials",
            [&](std::string& detail) {
              double worst = 0.0;
              std::string worst_model;
              for (const ModelSpec& m : suite) {
                Embedding e = build_embedding(m);
                VerificationReport report = verify_embedding(e, kTrials, kTol, kSeed);
                if (!report.all_pass() || report.checks.size() != 6) {
                  detail = m.name() + " failed";
                  return false;
                }
                if (report.max_residual() > worst) {
                  worst = report.max_residual();
                  worst_model = m.name();
                }
              }
              std::ostringstream msg;
              msg << suite.size() << " models, worst residual " << worst << " (" << worst_model
                  << ")";
              detail = msg.str();
              return worst < kTol;
            });

  criterion("dimension table: spin(4)->4, spin(5)->4, spin(6)->8, spin(7)->8, "
            "quaternion(2)->4",
            [&](std::string& detail) {
              struct Row {
                ModelSpec model;
                int expected;
              };
              std::vector<Row> rows = {
                  {ModelSpec::spin(4), 4},
                  {ModelSpec::spin(6), 8},
                  {ModelSpec::spin(5), 4},
                  {ModelSpec::spin(7), 8},
                  {ModelSpec::quantum(QuantumField::Quaternion, 2), 4},
              };
              for (const Row& row : rows) {
                int got = build_embedding(row.model).n;
                if (got != row.expected) {
                  detail = row.model.name() + " gave n = " + std::to_string(got);
                  return false;
                }
              }
              return true;
            });

  criterion("projector suite on reduced embeddings: conditional expectation, "
            "cone of squares, Kadison at 1e-9 over 200 trials",
            [&](std::string& detail) {
              double worst = 0.0;
              for (const ModelSpec& m : suite) {
                Embedding e = reduce_to_minimal(build_embedding(m), kTol);
                HermitianMap p = projector_from_embedding(e);
                VerificationReport report =
                    check_conditional_expectation(p, e, kTrials, kTol, kSeed);
                report.merge(check_cone_of_squares(p, e, kTrials, kTol, kSeed));
                report.merge(check_kadison_inequality(p, kTrials, kTol, kSeed));
                if (!report.all_pass()) {
                  detail = m.name() + " failed";
                  return false;
                }
                worst = std::max(worst, report.max_residual());
              }
              std::ostringstream msg;
              msg << "worst residual " << worst;
              detail = msg.str();
              return true;
            });

  criterion("complete positivity matches the decoherence classification",
            [&](std::string& detail) {
              std::vector<ModelSpec> physical = {
                  ModelSpec::classical(3),
                  ModelSpec::quantum(QuantumField::Complex, 2),
                  ModelSpec::direct_sum({ModelSpec::quantum(QuantumField::Complex, 2),
                                         ModelSpec::classical(2)}),
                  ModelSpec::spin(3),
              };
              for (const ModelSpec& m : physical) {
                HermitianMap p = projector_from_embedding(build_embedding(m));
                if (!is_completely_positive(p, kTol).first) {
                  detail = m.name() + " should be completely positive";
                  return false;
                }
              }
              // the real-quantum witness is the derived -1/2
              {
                HermitianMap p = projector_from_embedding(
                    build_embedding(ModelSpec::quantum(QuantumField::Real, 2)));
                auto [cp, witness] = is_completely_positive(p, kTol);
                if (cp || std::abs(witness + 0.5) > 1e-9) {
                  detail = "real quantum witness " + std::to_string(witness);
                  return false;
                }
              }
              std::vector<ModelSpec> unphysical = {
                  ModelSpec::quantum(QuantumField::Quaternion, 2),
                  ModelSpec::spin(2),
                  ModelSpec::spin(4),
                  ModelSpec::spin(5),
                  ModelSpec::spin(6),
              };
              for (const ModelSpec& m : unphysical) {
                HermitianMap p = projector_from_embedding(build_embedding(m));
                auto [cp, witness] = is_completely_positive(p, kTol);
                if (cp || witness > -0.1) {
                  detail = m.name() + " witness " + std::to_string(witness);
                  return false;
                }
              }
              return true;
            });

  criterion("polyhedral decision: simplices 1..6 classical, gbit/pentagon/cube "
            "not quantum embeddable",
            [&](std::string& detail) {
              for (int dim = 1; dim <= 6; ++dim) {
                Decision d = decide_polyhedral(standard_simplex(dim), kTol);
                if (d.verdict != Decision::Verdict::ClassicalIsomorphic ||
                    d.witness_residual >= kTol) {
                  detail = "simplex dim " + std::to_string(dim) + " residual " +
                           std::to_string(d.witness_residual);
                  return false;
                }
              }
              for (const ModelSpec& m : {gbit_model(), pentagon_cone(), cube_cone()}) {
                Decision d = decide_polyhedral(m, kTol);
                if (d.verdict != Decision::Verdict::NotQuantumEmbeddable ||
                    static_cast<int>(d.minimal_rays.size()) <= m.poly_dim) {
                  detail = m.name() + " not rejected";
                  return false;
                }
              }
              return true;
            });

  criterion("gbit certificate: Holevo image equation at 1e-10, affine ranks 2 "
            "and 3, four distinguishing effects",
            [&](std::string& detail) {
              auto [phi, report] = holevo_map(kTrials, 1e-10, kSeed);
              (void)phi;
              const CheckResult* eq = report.find("image_equation");
              if (!report.all_pass() || eq == nullptr || eq->max_residual >= 1e-10) {
                detail = "holevo verification failed";
                return false;
              }
              GbitCertificate cert = gbit_nonembeddability_certificate(kTol);
              if (!cert.valid()) {
                detail = "certificate invalid";
                return false;
              }
              std::ostringstream msg;
              msg << "ranks " << cert.state_space_affine_rank << " vs "
                  << cert.classical_target_affine_rank << ", "
                  << cert.distinct_witness_effects << " witness effects over "
                  << cert.distinguishers.size() << " pairs";
              detail = msg.str();
              return true;
            });

  criterion("minimality reduction: padded classical(2) in Q3 reduces to Q2 and "
            "re-verifies with a full-rank embedded state",
            [&](std::string& detail) {
              Embedding padded = pad_embedding(build_embedding(ModelSpec::classical(2)), 1);
              if (padded.n != 3 || !verify_embedding(padded, 64, kTol, kSeed).all_pass()) {
                detail = "padded embedding is not a valid embedding";
                return false;
              }
              Embedding reduced = reduce_to_minimal(padded, kTol);
              if (reduced.n != 2) {
                detail = "reduced to n = " + std::to_string(reduced.n);
                return false;
              }
              VerificationReport report = verify_embedding(reduced, kTrials, kTol, kSeed);
              HermitianMap p = projector_from_embedding(reduced);
              report.merge(check_projector(p, reduced, kTrials, kTol, kSeed));
              report.merge(check_conditional_expectation(p, reduced, kTrials, kTol, kSeed));
              report.merge(check_cone_of_squares(p, reduced, kTrials, kTol, kSeed));
              report.merge(check_kadison_inequality(p, kTrials, kTol, kSeed));
              if (!report.all_pass()) {
                detail = "reduced embedding failed the verification suite";
                return false;
              }
              double min_eig = min_eigenvalue(reduced.psi_matrix({0.5, 0.5}));
              std::ostringstream msg;
              msg << "uniform-state min eigenvalue " << min_eig;
              detail = msg.str();
              return min_eig > 0.0;
            });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  }
  return g_failures;
}
