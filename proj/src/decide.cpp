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

#include "qembed/decide.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qembed/nnls.hpp"

namespace qembed {

namespace {

constexpr double kRayMergeTol = 1e-9;

RMat columns_from(const std::vector<Vec>& rays, int dim, int skip = -1) {
  int count = static_cast<int>(rays.size()) - (skip >= 0 ? 1 : 0);
  RMat a(dim, count);
  int col = 0;
  for (std::size_t j = 0; j < rays.size(); ++j) {
    if (static_cast<int>(j) == skip) continue;
    a.set_column(col++, rays[j]);
  }
  return a;
}

// Merge numerically coincident directions, then drop rays expressible as
// nonnegative combinations of the others.
std::vector<Vec> minimal_ray_family(const std::vector<Vec>& rays, int dim, double tol) {
  std::vector<Vec> merged;
  for (const Vec& ray : rays) {
    Vec unit = scale(1.0 / norm2(ray), ray);
    bool duplicate = false;
    for (const Vec& seen : merged) {
      if (dot(scale(1.0 / norm2(seen), seen), unit) > 1.0 - kRayMergeTol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) merged.push_back(ray);
  }
  bool removed = true;
  while (removed && merged.size() > 1) {
    removed = false;
    for (std::size_t j = 0; j < merged.size(); ++j) {
      RMat others = columns_from(merged, dim, static_cast<int>(j));
      double residual = nnls(others, merged[j]).residual;
      if (residual <= tol * std::max(1.0, norm2(merged[j]))) {
        merged.erase(merged.begin() + static_cast<long>(j));
        removed = true;
        break;
      }
    }
  }
  return merged;
}

}  // namespace

int affine_rank(const std::vector<Vec>& points, double tol) {
  if (points.size() < 2) return 0;
  const int dim = static_cast<int>(points.front().size());
  RMat diffs(dim, static_cast<int>(points.size()) - 1);
  for (std::size_t j = 1; j < points.size(); ++j) {
    diffs.set_column(static_cast<int>(j) - 1, sub(points[j], points.front()));
  }
  return rank(diffs, tol);
}

Decision decide_polyhedral(const ModelSpec& poly, double tol) {
  if (poly.kind != ModelSpec::Kind::Polyhedral) {
    throw std::invalid_argument("decide_polyhedral: model is not polyhedral");
  }
  const int dim = poly.poly_dim;
  Decision decision;
  decision.minimal_rays = minimal_ray_family(poly.poly_rays, dim, tol);

  const int count = static_cast<int>(decision.minimal_rays.size());
  RMat ray_matrix = columns_from(decision.minimal_rays, dim);
  const bool independent = count == dim && rank(ray_matrix, tol) == dim;

  if (!independent) {
    // More extreme rays than dimensions: not a simplex cone, hence not
    // order-isomorphic to any Jordan-algebraic effect space.
    decision.verdict = Decision::Verdict::NotQuantumEmbeddable;
    return decision;
  }

  // Simplex cone. Rescale the rays so they sum to the unit, then invert:
  // the resulting map carries ray_i to the i-th classical basis vector and
  // the unit to (1, ..., 1).
  Vec mu = lstsq(ray_matrix, poly.poly_unit);
  for (double w : mu) {
    if (w <= tol) {
      throw std::invalid_argument("decide_polyhedral: unit is not interior to the simplex cone");
    }
  }
  RMat scaled(dim, dim);
  for (int j = 0; j < dim; ++j) scaled.set_column(j, scale(mu[j], decision.minimal_rays[j]));

  // Invert the scaled ray matrix column by column.
  RMat inverse(dim, dim);
  for (int i = 0; i < dim; ++i) {
    Vec basis(dim, 0.0);
    basis[i] = 1.0;
    Vec row = lstsq(scaled.transpose(), basis);
    for (int j = 0; j < dim; ++j) inverse(i, j) = row[j];
  }

  double residual = (inverse * scaled - RMat::identity(dim)).frob_norm();
  Vec unit_image = inverse.apply(poly.poly_unit);
  residual = std::max(residual, norm2(sub(unit_image, Vec(dim, 1.0))));

  decision.verdict = Decision::Verdict::ClassicalIsomorphic;
  decision.n = dim;
  decision.iso = inverse;
  decision.witness_residual = residual;
  return decision;
}

nlohmann::json Decision::to_json() const {
  nlohmann::json j;
  switch (verdict) {
    case Verdict::ClassicalIsomorphic:
      j["verdict"] = "classical_isomorphic";
      break;
    case Verdict::NotQuantumEmbeddable:
      j["verdict"] = "not_quantum_embeddable";
      break;
    case Verdict::Unknown:
      j["verdict"] = "unknown";
      break;
  }
  nlohmann::json witness;
  witness["extreme_rays"] = minimal_rays;
  witness["ray_count"] = minimal_rays.size();
  if (verdict == Verdict::ClassicalIsomorphic) {
    witness["n"] = n;
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < iso.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < iso.cols(); ++c) row.push_back(iso(i, c));
      rows.push_back(row);
    }
    witness["isomorphism"] = rows;
    witness["residual"] = witness_residual;
  }
  j["witness"] = witness;
  return j;
}

// ---------------------------------------------------------------------------
// Gbit / Holevo
// ---------------------------------------------------------------------------

namespace {

// Corner states ordered so opposite corners are paired: then
// w1 + w2 = w3 + w4, which forces the image equation x1+x2 = x3+x4.
std::vector<Vec> ordered_gbit_corners() {
  ModelSpec gbit = gbit_model();
  std::vector<Vec> corners = extreme_normalized_states(gbit);
  if (corners.size() != 4) {
    throw std::logic_error("gbit: expected four corner states");
  }
  std::vector<Vec> ordered;
  ordered.push_back(corners[0]);
  auto farthest = [&](const Vec& from, const std::vector<Vec>& pool) {
    std::size_t best = 0;
    double best_dist = -1.0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      double dist = norm2(sub(pool[i], from));
      if (dist > best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    return best;
  };
  std::vector<Vec> pool(corners.begin() + 1, corners.end());
  std::size_t opp = farthest(ordered[0], pool);
  ordered.push_back(pool[opp]);
  pool.erase(pool.begin() + static_cast<long>(opp));
  ordered.push_back(pool[0]);
  ordered.push_back(pool[1]);
  return ordered;
}

}  // namespace

std::pair<LinearMap, VerificationReport> holevo_map(int trials, double tol,
                                                    std::uint64_t seed) {
  ModelSpec gbit = gbit_model();
  std::vector<Vec> corners = ordered_gbit_corners();

  LinearMap phi;
  phi.matrix = RMat(4, 3);
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 3; ++col) phi.matrix(row, col) = corners[row][col];

  VerificationReport report;
  Vec unit_image = phi.apply(unit_effect(gbit));
  report.add_residual("unital", norm2(sub(unit_image, Vec(4, 1.0))), tol);

  double worst_pos = 0.0;
  double worst_eq = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    Vec e = sample_effect(gbit, rng);
    Vec image = phi.apply(e);
    for (double x : image) worst_pos = std::max(worst_pos, -x);
    worst_eq = std::max(worst_eq, std::abs(image[0] + image[1] - image[2] - image[3]));
  }
  for (const Vec& ray : gbit.poly_rays) {
    Vec image = phi.apply(ray);
    for (double x : image) worst_pos = std::max(worst_pos, -x);
    worst_eq = std::max(worst_eq, std::abs(image[0] + image[1] - image[2] - image[3]));
  }
  report.add_residual("positivity", std::max(0.0, worst_pos), tol);
  report.add_residual("image_equation", worst_eq, tol);
  return {phi, report};
}

bool GbitCertificate::valid() const {
  return distinguishers.size() == 6 && distinct_witness_effects == 4 &&
         state_space_affine_rank == 2 && classical_target_affine_rank == 3;
}

GbitCertificate gbit_nonembeddability_certificate(double tol) {
  ModelSpec gbit = gbit_model();
  GbitCertificate cert;
  cert.corners = ordered_gbit_corners();

  // One distinguishing effect per corner pair, searched over the extreme
  // effects: pairing 1 on one corner, 0 on the other. Every pair admits
  // several witnesses; prefer effects not used yet so the certificate
  // exercises the whole extremal family.
  std::vector<Vec> used;
  auto already_used = [&](const Vec& effect) {
    for (const Vec& u : used) {
      if (norm2(sub(u, effect)) <= tol) return true;
    }
    return false;
  };
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::vector<DistinguisherWitness> candidates;
      for (const Vec& effect : gbit.poly_rays) {
        double va = pairing(gbit, cert.corners[a], effect);
        double vb = pairing(gbit, cert.corners[b], effect);
        DistinguisherWitness w;
        w.effect = effect;
        if (std::abs(va - 1.0) <= tol && std::abs(vb) <= tol) {
          w.corner_a = a;
          w.corner_b = b;
          w.value_a = va;
          w.value_b = vb;
        } else if (std::abs(vb - 1.0) <= tol && std::abs(va) <= tol) {
          w.corner_a = b;
          w.corner_b = a;
          w.value_a = vb;
          w.value_b = va;
        } else {
          continue;
        }
        candidates.push_back(w);
      }
      if (candidates.empty()) {
        throw std::logic_error("gbit certificate: missing distinguisher for a corner pair");
      }
      const DistinguisherWitness* pick = &candidates.front();
      for (const DistinguisherWitness& w : candidates) {
        if (!already_used(w.effect)) {
          pick = &w;
          break;
        }
      }
      cert.distinguishers.push_back(*pick);
      if (!already_used(pick->effect)) used.push_back(pick->effect);
    }
  cert.distinct_witness_effects = static_cast<int>(used.size());

  cert.state_space_affine_rank = affine_rank(cert.corners, tol);

  std::vector<Vec> deterministic;
  for (int i = 0; i < 4; ++i) {
    Vec delta(4, 0.0);
    delta[i] = 1.0;
    deterministic.push_back(delta);
  }
  cert.classical_target_affine_rank = affine_rank(deterministic, tol);

  cert.conclusion =
      "the four corner states are pairwise perfectly distinguishable, so a "
      "probability-preserving state map must carry them onto the four "
      "deterministic distributions; that family has affine rank " +
      std::to_string(cert.classical_target_affine_rank) +
      " while the square of states only has affine rank " +
      std::to_string(cert.state_space_affine_rank) +
      ", so no linear state map exists";
  return cert;
}

nlohmann::json GbitCertificate::to_json() const {
  nlohmann::json j;
  j["corners"] = corners;
  nlohmann::json ds = nlohmann::json::array();
  for (const DistinguisherWitness& w : distinguishers) {
    nlohmann::json entry;
    entry["corner_a"] = w.corner_a;
    entry["corner_b"] = w.corner_b;
    entry["effect"] = w.effect;
    entry["value_a"] = w.value_a;
    entry["value_b"] = w.value_b;
    ds.push_back(entry);
  }
  j["distinguishers"] = ds;
  j["distinct_witness_effects"] = distinct_witness_effects;
  nlohmann::json ranks;
  ranks["state_space"] = state_space_affine_rank;
  ranks["classical_targets"] = classical_target_affine_rank;
  j["ranks"] = ranks;
  j["conclusion"] = conclusion;
  return j;
}

}  // namespace qembed
