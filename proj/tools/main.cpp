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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qembed/decide.hpp"
#include "qembed/embedding.hpp"
#include "qembed/jordan.hpp"
#include "qembed/model.hpp"
#include "qembed/projector.hpp"

namespace {

using nlohmann::json;
using namespace qembed;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::string model_path;
  double tol = 1e-9;
  int trials = 200;
  std::uint64_t seed = 42;
  bool json_output = false;
  std::string out_path;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

ModelSpec load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read model file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& err) {
    throw UsageError(path + ":" + std::to_string(line_of_offset(text, err.byte)) +
                     ": " + err.what());
  }
  try {
    return model_from_json(parsed);
  } catch (const std::invalid_argument& err) {
    throw UsageError(path + ": " + err.what());
  }
}

void write_output(const RunConfig& cfg, const json& payload) {
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path);
    if (!out) throw UsageError("cannot write output file: " + cfg.out_path);
    out << payload.dump(2) << "\n";
  }
}

void print_report_table(const VerificationReport& report) {
  std::printf("%-34s %-6s %14s  %s\n", "check", "status", "max_residual", "witness");
  for (const CheckResult& c : report.checks) {
    std::printf("%-34s %-6s %14.3e  %s\n", c.check.c_str(), c.pass ? "PASS" : "FAIL",
                c.max_residual, c.witness.c_str());
  }
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json entry;
    entry["check"] = c.check;
    entry["status"] = c.pass ? "pass" : "fail";
    entry["max_residual"] = c.max_residual;
    entry["witness"] = c.witness;
    checks.push_back(entry);
  }
  return checks;
}

void emit(const RunConfig& cfg, const json& payload, const std::string& human) {
  if (cfg.json_output) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << human;
  }
  write_output(cfg, payload);
}

int cmd_embed(const RunConfig& cfg) {
  ModelSpec model = load_model(cfg.model_path);
  Embedding e;
  try {
    e = build_embedding(model);
  } catch (const NotEmbeddableError& err) {
    throw UsageError(std::string(err.what()));
  }
  json payload = embedding_to_json(e);
  std::ostringstream human;
  human << "model " << model.name() << " embeds into quantum dimension n = " << e.n << "\n";
  emit(cfg, payload, human.str());
  return kExitOk;
}

int cmd_reduce(const RunConfig& cfg) {
  ModelSpec model = load_model(cfg.model_path);
  Embedding e;
  try {
    e = build_embedding(model);
  } catch (const NotEmbeddableError& err) {
    throw UsageError(std::string(err.what()));
  }
  Embedding reduced = reduce_to_minimal(e, cfg.tol);
  json payload = embedding_to_json(reduced);
  std::ostringstream human;
  human << "model " << model.name() << ": built n = " << e.n << ", minimal n = " << reduced.n
        << "\n";
  emit(cfg, payload, human.str());
  return kExitOk;
}

VerificationReport full_verification(const Embedding& reduced, const RunConfig& cfg) {
  VerificationReport report = verify_embedding(reduced, cfg.trials, cfg.tol, cfg.seed);
  report.merge(check_jordan_axioms(reduced.model, cfg.trials, cfg.tol, cfg.seed));
  HermitianMap p = projector_from_embedding(reduced);
  report.merge(check_projector(p, reduced, cfg.trials, cfg.tol, cfg.seed));
  report.merge(check_conditional_expectation(p, reduced, cfg.trials, cfg.tol, cfg.seed));
  report.merge(check_kadison_inequality(p, cfg.trials, cfg.tol, cfg.seed));
  report.merge(check_cone_of_squares(p, reduced, cfg.trials, cfg.tol, cfg.seed));
  return report;
}

int cmd_verify(const RunConfig& cfg) {
  ModelSpec model = load_model(cfg.model_path);
  Embedding e;
  try {
    e = build_embedding(model);
  } catch (const NotEmbeddableError& err) {
    throw UsageError(std::string(err.what()));
  }
  Embedding reduced = reduce_to_minimal(e, cfg.tol);
  VerificationReport report = full_verification(reduced, cfg);

  json payload;
  payload["model"] = model_to_json(model);
  payload["n"] = reduced.n;
  payload["checks"] = report_to_json(report);
  payload["overall"] = report.all_pass() ? "pass" : "fail";

  if (cfg.json_output) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << "model " << model.name() << ", minimal quantum dimension n = " << reduced.n
              << "\n";
    print_report_table(report);
    std::printf("overall: %s\n", report.all_pass() ? "PASS" : "FAIL");
  }
  write_output(cfg, payload);
  return report.all_pass() ? kExitOk : kExitFailed;
}

int cmd_choi(const RunConfig& cfg) {
  ModelSpec model = load_model(cfg.model_path);
  Embedding e;
  try {
    e = build_embedding(model);
  } catch (const NotEmbeddableError& err) {
    throw UsageError(std::string(err.what()));
  }
  Embedding reduced = reduce_to_minimal(e, cfg.tol);
  HermitianMap p = projector_from_embedding(reduced);
  CMat choi = choi_matrix(p);
  std::vector<double> spectrum = herm_eigenvalues(choi);
  auto [cp, min_eig] = is_completely_positive(p, cfg.tol);

  json payload = choi_to_json(choi);
  payload["spectrum"] = spectrum;
  payload["completely_positive"] = cp;
  payload["min_eigenvalue"] = min_eig;

  std::ostringstream human;
  human << "Choi spectrum of the projector for " << model.name() << " (n = " << reduced.n
        << "):\n";
  for (double lam : spectrum) human << "  " << std::to_string(lam) << "\n";
  human << "completely positive: " << (cp ? "yes" : "no") << " (min eigenvalue "
        << std::to_string(min_eig) << ")\n";
  emit(cfg, payload, human.str());
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg) {
  ModelSpec model = load_model(cfg.model_path);
  Embedding e;
  try {
    e = build_embedding(model);
  } catch (const NotEmbeddableError& err) {
    throw UsageError(std::string(err.what()));
  }
  Embedding reduced = reduce_to_minimal(e, cfg.tol);
  DecoherenceClassification result = classify_decoherence(reduced, cfg.tol);

  json payload;
  payload["model"] = model_to_json(model);
  payload["n"] = reduced.n;
  if (result.physical) {
    payload["verdict"] = "cp_decoherence";
    payload["block_sizes"] = result.block_sizes;
  } else {
    payload["verdict"] = "not_physical";
    payload["min_choi_eigenvalue"] = result.min_choi_eigenvalue;
  }
  payload["checks"] = report_to_json(result.details);

  std::ostringstream human;
  if (result.physical) {
    human << "decoherence map is completely positive; block sizes:";
    for (int b : result.block_sizes) human << " " << b;
    human << "\n";
  } else {
    human << "no physical decoherence map: min Choi eigenvalue "
          << std::to_string(result.min_choi_eigenvalue) << "\n";
  }
  emit(cfg, payload, human.str());
  return kExitOk;
}

int cmd_decide(const RunConfig& cfg) {
  ModelSpec model = load_model(cfg.model_path);
  if (model.kind != ModelSpec::Kind::Polyhedral) {
    throw UsageError("decide requires a polyhedral model file");
  }
  Decision decision = decide_polyhedral(model, cfg.tol);
  json payload = decision.to_json();

  std::ostringstream human;
  switch (decision.verdict) {
    case Decision::Verdict::ClassicalIsomorphic:
      human << "verdict: classical_isomorphic(" << decision.n << "), witness residual "
            << std::to_string(decision.witness_residual) << "\n";
      break;
    case Decision::Verdict::NotQuantumEmbeddable:
      human << "verdict: not_quantum_embeddable (" << decision.minimal_rays.size()
            << " extreme rays in dimension " << model.poly_dim << ")\n";
      break;
    case Decision::Verdict::Unknown:
      human << "verdict: unknown\n";
      break;
  }
  emit(cfg, payload, human.str());
  return decision.verdict == Decision::Verdict::NotQuantumEmbeddable ? kExitFailed : kExitOk;
}

int cmd_demo(const RunConfig& cfg) {
  auto [phi, report] = holevo_map(cfg.trials, 1e-10, cfg.seed);
  GbitCertificate cert = gbit_nonembeddability_certificate(cfg.tol);
  Decision decision = decide_polyhedral(gbit_model(), cfg.tol);

  json payload;
  json phi_rows = json::array();
  for (int i = 0; i < phi.matrix.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < phi.matrix.cols(); ++j) row.push_back(phi.matrix(i, j));
    phi_rows.push_back(row);
  }
  payload["holevo_map"] = phi_rows;
  payload["holevo_checks"] = report_to_json(report);
  payload["certificate"] = cert.to_json();
  payload["decision"] = decision.to_json();

  bool ok = report.all_pass() && cert.valid() &&
            decision.verdict == Decision::Verdict::NotQuantumEmbeddable;

  std::ostringstream human;
  human << "Holevo effect map (rows = classical outcomes, columns = gbit coordinates):\n";
  for (int i = 0; i < 4; ++i) {
    human << " ";
    for (int j = 0; j < 3; ++j) human << " " << std::to_string(phi.matrix(i, j));
    human << "\n";
  }
  human << "image satisfies x1 + x2 = x3 + x4; checks "
        << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  human << "state-space affine rank " << cert.state_space_affine_rank
        << " < deterministic-target affine rank " << cert.classical_target_affine_rank
        << ": no linear state map (certificate " << (cert.valid() ? "valid" : "INVALID")
        << ")\n";
  human << "polyhedral decision on the gbit: "
        << (decision.verdict == Decision::Verdict::NotQuantumEmbeddable
                ? "not_quantum_embeddable"
                : "unexpected")
        << "\n";
  emit(cfg, payload, human.str());
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct, verify, and classify embeddings of probabilistic models "
               "into complex quantum theory"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool needs_model) {
    if (needs_model) {
      sub->add_option("model", cfg.model_path, "model JSON file")->required();
    }
    sub->add_option("--tol", cfg.tol, "numerical tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--trials", cfg.trials, "sampled trials per check")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_flag("--json", cfg.json_output, "print a JSON report to stdout");
    sub->add_option("--out", cfg.out_path, "write the JSON artifact to a file");
  };

  add_common(app.add_subcommand("embed", "construct the catalog embedding"), true);
  add_common(app.add_subcommand("verify", "run the full verification suite"), true);
  add_common(app.add_subcommand("reduce", "reduce the embedding to minimal dimension"), true);
  add_common(app.add_subcommand("choi", "Choi spectrum and complete positivity"), true);
  add_common(app.add_subcommand("classify", "classify the decoherence projector"), true);
  add_common(app.add_subcommand("decide", "decide classical embeddability (polyhedral)"),
             true);
  add_common(app.add_subcommand("demo", "gbit / Holevo non-embeddability demonstration"),
             false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    app.exit(err);
    return kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (cfg.command == "embed") return cmd_embed(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "reduce") return cmd_reduce(cfg);
    if (cfg.command == "choi") return cmd_choi(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "decide") return cmd_decide(cfg);
    if (cfg.command == "demo") return cmd_demo(cfg);
    std::cerr << "unknown command\n";
    return kExitUsage;
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFailed;
  }
}
