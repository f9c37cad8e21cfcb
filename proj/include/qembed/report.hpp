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

namespace qembed {

/// One verified property: name, outcome, worst residual seen, and an optional
/// short witness (e.g. the offending eigenvalue or trial index).
struct CheckResult {
  std::string check;
  bool pass = false;
  double max_residual = 0.0;
  std::string witness;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  double max_residual() const;
  const CheckResult* find(const std::string& name) const;

  void add(std::string check, bool pass, double max_residual, std::string witness = "");
  /// Residual-style check: passes iff residual <= tol.
  void add_residual(std::string check, double residual, double tol, std::string witness = "");
  void merge(const VerificationReport& other);
};

}  // namespace qembed
