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
#include <functional>
#include <vector>

#include "gsuzuki/finite_field.hpp"

namespace gs {

/// Options for the exhaustive counters.
struct CounterOptions {
  /// Worker threads; 0 means hardware concurrency.
  int threads = 0;
  /// Skip the packed fast paths (reference mode, used by tests).
  bool force_generic = false;
  /// Enumeration ceiling on |F|; a larger field raises ResourceError.
  Int limit = Int(1) << 40;
};

/// Counts x in F with Tr_abs(multiplier_j * (Ux) * (Vx)) = 0 for every j,
/// where U and V are F_p-linear maps given by their columns (images of the
/// power basis).  This is the shared inner loop of every brute-force point
/// count: the per-element condition is evaluated incrementally along a
/// reflected Gray walk of the coefficient space, so the cost per element is
/// O(1) field-size-independent word operations.
std::uint64_t count_trace_zero(const Field& field,
                               const std::vector<std::vector<long>>& u_cols,
                               const std::vector<std::vector<long>>& v_cols,
                               const std::vector<Element>& multipliers,
                               const CounterOptions& options = {});

/// Columns of an F_p-linear map on the field (images of the basis X^j).
std::vector<std::vector<long>> linear_map_columns(
    const Field& f, const std::function<Element(const Element&)>& map);

}  // namespace gs
