// Copyright 2026 the gsuzuki authors
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

#include <cstdint>
#include <string>
#include <vector>

#include "gsuzuki/suzuki.hpp"

namespace gs {

struct VerifyCheck {
  std::string name;
  int n = 0;  // 0 for n-independent checks
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok = false;
};

struct VerifyOptions {
  int n_max = 8;
  CounterOptions counter;
  std::uint64_t seed = 0;
  int samples = 25;
};

/// Cross-check battery for one curve: the closed-form count against the
/// enumeration oracle, the subcover decomposition and the supersingular
/// propagation; Newton counts read off the L-polynomial; the subcover
/// power relation for L; the radical-dimension pattern; the substitution
/// identities; the period; and the Gauss-sum identities for this p.
VerifyReport run_verification(const CurveParams& c, const VerifyOptions& options = {});

}  // namespace gs
