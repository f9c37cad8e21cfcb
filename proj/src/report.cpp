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

#include "qembed/report.hpp"

#include <algorithm>

namespace qembed {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const CheckResult& c : checks) m = std::max(m, c.max_residual);
  return m;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.check == name) return &c;
  }
  return nullptr;
}

void VerificationReport::add(std::string check, bool pass, double max_residual,
                             std::string witness) {
  checks.push_back({std::move(check), pass, max_residual, std::move(witness)});
}

void VerificationReport::add_residual(std::string check, double residual, double tol,
                                      std::string witness) {
  add(std::move(check), residual <= tol, residual, std::move(witness));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

}  // namespace qembed
