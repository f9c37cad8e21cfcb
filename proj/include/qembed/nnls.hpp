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

#include "qembed/linalg.hpp"

namespace qembed {

struct NnlsResult {
  Vec coefficients;  // entrywise >= 0
  double residual;   // || A x - b ||_2
};

/// Nonnegative least squares min ||A x - b|| s.t. x >= 0 by the
/// Lawson-Hanson active-set method. Intended for small instances
/// (tens of columns).
NnlsResult nnls(const RMat& a, const Vec& b);

}  // namespace qembed
