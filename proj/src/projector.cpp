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

#include "qembed/projector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace qembed {

namespace {

CMat jordan_mul(const CMat& x, const CMat& y) { return 0.5 * (x * y + y * x); }

CMat random_hermitian(int n, Rng& rng) {
  Vec coords(static_cast<std::size_t>(n) * n);
  for (double& c : coords) c = rng.normal();
  return coords_to_herm(n, coords);
}

CMat random_psd(int n, Rng& rng) {
  CMat x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = cplx(rng.normal(), rng.normal());
  return x * x.adjoint();
}

// Orthonormal basis of the embedded effect space, as coordinate columns.
RMat image_basis(const Embedding& e) { return orthonormal_columns(e.phi.matrix); }

double image_membership_residual(const RMat& basis, const Vec& v) {
  Vec coeff = basis.apply_transposed(v);
  Vec projected = basis.apply(coeff);
  return norm2(sub(v, projected));
}

}  // namespace

CMat HermitianMap::apply_complex(const CMat& x) const {
  CMat h = 0.5 * (x + x.adjoint());
  CMat k = cplx(0.0, -0.5) * (x - x.adjoint());
  CMat ph = apply(h);
  CMat pk = apply(k);
  return ph + cplx(0.0, 1.0) * pk;
}

HermitianMap projector_from_embedding(const Embedding& e) {
  // Cheap deterministic gates against corrupted inputs.
  Vec unit_img = e.phi.apply(unit_effect(e.model));
  Vec identity_coords = herm_to_coords(CMat::identity(e.n));
  if (norm2(sub(unit_img, identity_coords)) > 1e-8) {
    throw std::invalid_argument("projector_from_embedding: embedding is not unital");
  }
  RMat left_inverse = e.psi.matrix.transpose() * e.phi.matrix;
  if ((left_inverse - RMat::identity(ambient_dim(e.model))).frob_norm() > 1e-8) {
    throw std::invalid_argument("projector_from_embedding: psi* phi is not the identity");
  }
  HermitianMap p;
  p.n = e.n;
  p.matrix = e.phi.matrix * e.psi.matrix.transpose();
  return p;
}

HermitianMap adjoint_map(const HermitianMap& p) {
  return {p.n, p.matrix.transpose()};
}

VerificationReport check_projector(const HermitianMap& p, const Embedding& e, int trials,
                                   double tol, std::uint64_t seed) {
  VerificationReport report;
  report.add_residual("idempotence", (p.matrix * p.matrix - p.matrix).frob_norm(), tol);

  CMat identity = CMat::identity(p.n);
  report.add_residual("unital", (p.apply(identity) - identity).frob_norm(), tol);

  double worst_pos = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    CMat b = random_psd(p.n, rng);
    worst_pos = std::max(worst_pos, -min_eigenvalue(p.apply(b)));
  }
  report.add_residual("positivity", std::max(0.0, worst_pos), tol);

  // Column spaces of P and phi agree.
  RMat q_p = orthonormal_columns(p.matrix);
  RMat q_phi = image_basis(e);
  RMat diff = q_p * q_p.transpose() - q_phi * q_phi.transpose();
  report.add_residual("image_equals_effect_space", diff.frob_norm(), tol);

  // P(B+) lands in the embedded cone and P fixes embedded effects.
  double worst_cone = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed + 0xC0DE, static_cast<std::uint64_t>(trial));
    Vec image = p.apply_coords(herm_to_coords(random_psd(p.n, rng)));
    worst_cone = std::max(worst_cone, image_membership_residual(q_phi, image) /
                                          std::max(1.0, norm2(image)));
    Vec fixed = e.phi.apply(sample_effect(e.model, rng));
    Vec moved = sub(p.apply_coords(fixed), fixed);
    worst_cone = std::max(worst_cone, norm2(moved) / std::max(1.0, norm2(fixed)));
  }
  report.add_residual("cone_projection", worst_cone, tol);
  return report;
}

VerificationReport check_conditional_expectation(const HermitianMap& p, const Embedding& e,
                                                 int trials, double tol, std::uint64_t seed) {
  VerificationReport report;
  const bool minimal = is_minimal(e, tol);
  report.add("minimality", minimal, minimal ? 0.0 : 1.0,
             minimal ? "" : "embedded barycenter is rank deficient; run reduce_to_minimal");

  RMat basis = image_basis(e);
  double worst_module = 0.0, worst_square = 0.0, worst_closure = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    CMat x = coords_to_herm(p.n, e.phi.apply(random_element(e.model, rng)));
    CMat y = random_hermitian(p.n, rng);

    CMat lhs = p.apply(jordan_mul(x, y));
    CMat rhs = jordan_mul(x, p.apply(y));
    worst_module = std::max(worst_module, (lhs - rhs).frob_norm() /
                                              std::max(1.0, x.frob_norm() * y.frob_norm()));

    CMat xsq = jordan_mul(x, x);
    worst_square = std::max(worst_square, (p.apply(xsq) - xsq).frob_norm() /
                                              std::max(1.0, xsq.frob_norm()));

    CMat px = p.apply(random_hermitian(p.n, rng));
    CMat py = p.apply(y);
    Vec prod = herm_to_coords(jordan_mul(px, py));
    worst_closure = std::max(worst_closure, image_membership_residual(basis, prod) /
                                                std::max(1.0, norm2(prod)));
  }
  report.add_residual("module_property", worst_module, tol);
  report.add_residual("fixes_squares", worst_square, tol);
  report.add_residual("jordan_closure", worst_closure, tol);
  return report;
}

VerificationReport check_kadison_inequality(const HermitianMap& p, int trials, double tol,
                                            std::uint64_t seed) {
  VerificationReport report;
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    CMat z = random_hermitian(p.n, rng);
    CMat pz = p.apply(z);
    CMat gap = p.apply(z * z) - pz * pz;
    worst = std::max(worst, -min_eigenvalue(gap));
  }
  report.add_residual("kadison_inequality", std::max(0.0, worst), tol);
  return report;
}

VerificationReport check_cone_of_squares(const HermitianMap& p, const Embedding& e, int trials,
                                         double tol, std::uint64_t seed) {
  VerificationReport report;
  RMat basis = image_basis(e);
  double worst_psd = 0.0, worst_root = 0.0, worst_fixed = 0.0, worst_dual = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    CMat b = random_psd(p.n, rng);
    CMat pb = p.apply(b);
    worst_psd = std::max(worst_psd, -min_eigenvalue(pb) / std::max(1.0, pb.frob_norm()));

    // A square root of P(b) living inside the image certifies that P(b) is a
    // square of an image element.
    CMat root = sqrt_psd(pb, 1e-8);
    Vec root_coords = herm_to_coords(root);
    worst_root = std::max(worst_root, image_membership_residual(basis, root_coords) /
                                          std::max(1.0, norm2(root_coords)));

    CMat x = p.apply(random_hermitian(p.n, rng));
    CMat xsq = jordan_mul(x, x);
    worst_fixed = std::max(worst_fixed, (p.apply(xsq) - xsq).frob_norm() /
                                            std::max(1.0, xsq.frob_norm()));

    double inner = hs_inner(xsq, pb);
    worst_dual = std::max(worst_dual, -inner / std::max(1.0, xsq.frob_norm() * pb.frob_norm()));
  }
  report.add_residual("image_cone_is_psd", std::max(0.0, worst_psd), tol);
  report.add_residual("square_root_in_image", worst_root, tol);
  report.add_residual("squares_are_fixed", worst_fixed, tol);
  report.add_residual("self_duality", std::max(0.0, worst_dual), tol);
  return report;
}

CMat choi_matrix(const HermitianMap& p) {
  const int n = p.n;
  CMat choi(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CMat eij(n, n);
      eij(i, j) = 1.0;
      CMat image = p.apply_complex(eij);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) choi(i * n + k, j * n + l) = image(k, l);
    }
  // The construction is Hermitian up to rounding; symmetrize exactly.
  CMat adj = choi.adjoint();
  return 0.5 * (choi + adj);
}

std::pair<bool, double> is_completely_positive(const HermitianMap& p, double tol) {
  double min_eig = min_eigenvalue(choi_matrix(p));
  return {min_eig >= -tol * p.n, min_eig};
}

namespace {

struct BlockScan {
  std::vector<int> sizes;
  double commutation_residual = 0.0;
};

// Block structure of the image *-algebra: cluster the spectrum of a generic
// image element, then connect eigenspaces that any basis element couples.
// Generic elements separate the blocks with probability 1; a commutation
// check on the resulting block projectors guards against bad draws.
BlockScan block_structure(const HermitianMap& p, const RMat& basis, std::uint64_t seed) {
  const int n = p.n;
  const int k = basis.cols();
  Rng rng(seed);
  Vec coeff(k);
  for (double& c : coeff) c = rng.normal();
  CMat generic = coords_to_herm(n, basis.apply(coeff));
  EigDecomposition eig = herm_eig(generic);

  const double cluster_tol = 1e-8 * std::max(1.0, generic.frob_norm());
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < n; ++i) {
    if (!clusters.empty() && eig.values[i] - eig.values[i - 1] <= cluster_tol) {
      clusters.back().push_back(i);
    } else {
      clusters.push_back({i});
    }
  }
  const int c = static_cast<int>(clusters.size());

  std::vector<CMat> basis_mats;
  for (int m = 0; m < k; ++m) basis_mats.push_back(coords_to_herm(n, basis.column(m)));

  // adjacency between eigenvalue clusters
  std::vector<int> parent(c);
  for (int i = 0; i < c; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b) {
      bool coupled = false;
      for (const CMat& mat : basis_mats) {
        double coupling = 0.0;
        for (int ia : clusters[a])
          for (int ib : clusters[b]) {
            cplx entry = 0.0;
            for (int r = 0; r < n; ++r)
              for (int s = 0; s < n; ++s)
                entry += std::conj(eig.vectors(r, ia)) * mat(r, s) * eig.vectors(s, ib);
            coupling = std::max(coupling, std::abs(entry));
          }
        if (coupling > 1e-8 * std::max(1.0, mat.frob_norm())) {
          coupled = true;
          break;
        }
      }
      if (coupled) parent[find(a)] = find(b);
    }

  std::vector<int> comp_of(c);
  std::vector<int> comp_ids;
  for (int i = 0; i < c; ++i) {
    int root = find(i);
    auto it = std::find(comp_ids.begin(), comp_ids.end(), root);
    if (it == comp_ids.end()) {
      comp_ids.push_back(root);
      comp_of[i] = static_cast<int>(comp_ids.size()) - 1;
    } else {
      comp_of[i] = static_cast<int>(it - comp_ids.begin());
    }
  }

  BlockScan scan;
  scan.sizes.assign(comp_ids.size(), 0);
  std::vector<CMat> projectors(comp_ids.size(), CMat(n, n));
  for (int i = 0; i < c; ++i) {
    scan.sizes[comp_of[i]] += static_cast<int>(clusters[i].size());
    for (int col : clusters[i]) {
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          projectors[comp_of[i]](r, s) += eig.vectors(r, col) * std::conj(eig.vectors(s, col));
    }
  }
  for (const CMat& proj : projectors)
    for (const CMat& mat : basis_mats) {
      double res = (proj * mat - mat * proj).frob_norm() / std::max(1.0, mat.frob_norm());
      scan.commutation_residual = std::max(scan.commutation_residual, res);
    }
  std::sort(scan.sizes.begin(), scan.sizes.end(), std::greater<int>());
  return scan;
}

}  // namespace

DecoherenceClassification classify_decoherence(const Embedding& e, double tol) {
  if (!is_minimal(e, tol)) {
    throw std::invalid_argument("classify_decoherence: embedding is not minimal; reduce first");
  }
  HermitianMap p = projector_from_embedding(e);
  DecoherenceClassification out;
  auto [cp, min_eig] = is_completely_positive(p, tol);
  out.min_choi_eigenvalue = min_eig;
  out.physical = cp;
  out.details.add("completely_positive", cp, std::max(0.0, -min_eig),
                  "min Choi eigenvalue " + std::to_string(min_eig));
  if (!cp) return out;

  // The image of a CP projector is a *-subalgebra: closed under the
  // associative product, not just the Jordan one.
  RMat basis = image_basis(e);
  double worst_star = 0.0;
  for (int trial = 0; trial < 64; ++trial) {
    Rng rng = trial_rng(0x57A6, static_cast<std::uint64_t>(trial));
    CMat x = p.apply(random_hermitian(p.n, rng));
    CMat y = p.apply(random_hermitian(p.n, rng));
    CMat prod = x * y;
    CMat h = 0.5 * (prod + prod.adjoint());
    CMat k = cplx(0.0, -0.5) * (prod - prod.adjoint());
    for (const CMat* part : {&h, &k}) {
      Vec coords = herm_to_coords(*part);
      worst_star = std::max(worst_star, image_membership_residual(basis, coords) /
                                            std::max(1.0, norm2(coords)));
    }
  }
  out.details.add_residual("star_algebra_closure", worst_star, tol);

  for (int attempt = 0; attempt < 5; ++attempt) {
    BlockScan scan = block_structure(p, basis, 0xB10C + attempt);
    if (scan.commutation_residual <= tol * 10) {
      out.block_sizes = scan.sizes;
      out.details.add_residual("block_projectors_commute", scan.commutation_residual, tol * 10);
      break;
    }
  }
  if (out.block_sizes.empty()) {
    out.details.add("block_structure", false, 1.0, "no stable block decomposition found");
  }
  return out;
}

nlohmann::json choi_to_json(const CMat& choi) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < choi.rows(); ++i)
    for (int j = 0; j < choi.cols(); ++j) {
      entries.push_back({choi(i, j).real(), choi(i, j).imag()});
    }
  nlohmann::json out;
  out["size"] = choi.rows();
  out["entries"] = entries;
  return out;
}

}  // namespace qembed
