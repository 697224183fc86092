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

#include <doctest.h>

#include "gsuzuki/solution_counter.hpp"
#include "naive_oracle.hpp"

using namespace gs;

// The packed fast paths, the generic Gray walk, and the plain per-element
// reference must count identically on every supported shape.
TEST_CASE("counter paths agree with the naive reference") {
  struct Shape {
    long p;
    int t;
    int n;
  };
  for (Shape s : {Shape{3, 1, 5}, Shape{3, 1, 8}, Shape{3, 1, 9}, Shape{5, 1, 5},
                  Shape{5, 1, 6}, Shape{7, 1, 4}, Shape{3, 2, 2}, Shape{3, 2, 3},
                  Shape{11, 1, 3}}) {
    const int m = 2 * s.t - 1;
    Field f = Field::get(s.p, m * s.n);
    auto u = linear_map_columns(f, [&](const Element& e) { return e.frobenius(s.t); });
    auto v = linear_map_columns(f, [&](const Element& e) { return e.frobenius(m) - e; });
    std::vector<Element> lams = subfield_basis(f, m);

    CounterOptions generic;
    generic.force_generic = true;
    CounterOptions fast;
    std::uint64_t a = count_trace_zero(f, u, v, lams, generic);
    std::uint64_t b = count_trace_zero(f, u, v, lams, fast);
    CAPTURE(s.p);
    CAPTURE(s.n);
    CHECK(a == b);

    Int q = int_pow(Int(s.p), static_cast<unsigned long>(m));
    Int naive = testing::naive_curve_count(s.p, s.t, s.n);
    CHECK(Int(static_cast<unsigned long>(b)) * q + 1 == naive);
  }
}

TEST_CASE("counter respects the enumeration limit") {
  Field f = Field::get(3, 10);
  auto id_cols = linear_map_columns(f, [](const Element& e) { return e; });
  CounterOptions opts;
  opts.limit = 1000;  // 3^10 > 1000
  CHECK_THROWS_AS(count_trace_zero(f, id_cols, id_cols, {f.one()}, opts), ResourceError);
}

TEST_CASE("counter validates inputs") {
  Field f = Field::get(3, 2);
  auto id_cols = linear_map_columns(f, [](const Element& e) { return e; });
  CHECK_THROWS_AS(count_trace_zero(f, id_cols, id_cols, {}, {}), ParameterError);
  Field other = Field::get(5, 1);
  CHECK_THROWS_AS(count_trace_zero(f, id_cols, id_cols, {other.one()}, {}),
                  FieldMismatchError);
}
