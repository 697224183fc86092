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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsuzuki/covers.hpp"
#include "gsuzuki/cyclotomic.hpp"
#include "gsuzuki/suzuki.hpp"
#include "gsuzuki/verify.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const gs::Int& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list poly_to_py(const gs::IntPoly& p) {
  py::list out;
  for (const gs::Int& c : p.coeffs()) out.append(to_py(c));
  return out;
}

gs::CounterOptions options_from(int threads, const std::string& limit) {
  gs::CounterOptions opts;
  opts.threads = threads;
  opts.limit = gs::Int(limit);
  return opts;
}

py::dict count_report_to_py(const gs::CountReport& rep) {
  py::dict d;
  d["n"] = rep.n;
  d["N"] = to_py(rep.N);
  d["method"] = gs::to_string(rep.method);
  d["maximality"] = gs::to_string(rep.maximality);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact invariants of generalized Suzuki curves";

  // Base first: translators run in reverse registration order, so the
  // derived classes must be matched before gs::Error.
  py::register_exception<gs::Error>(m, "GsError", PyExc_RuntimeError);
  py::register_exception<gs::ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<gs::ResourceError>(m, "ResourceError", PyExc_ValueError);

  m.def(
      "point_count",
      [](long p, int t, int n) { return count_report_to_py(gs::point_count({p, t}, n)); },
      py::arg("p"), py::arg("t"), py::arg("n"),
      "Closed-form number of rational points over F_{q^n}.");

  m.def(
      "brute_force_count",
      [](long p, int t, int n, int threads, const std::string& limit) {
        return to_py(gs::brute_force_count({p, t}, n, options_from(threads, limit)));
      },
      py::arg("p"), py::arg("t"), py::arg("n"), py::arg("threads") = 0,
      py::arg("oracle_limit") = "1099511627776",
      "Enumeration count of rational points over F_{q^n}.");

  m.def(
      "decomposition_count",
      [](long p, int t, int n, int threads, const std::string& limit) {
        return to_py(gs::decomposition_count({p, t}, n, options_from(threads, limit)));
      },
      py::arg("p"), py::arg("t"), py::arg("n"), py::arg("threads") = 0,
      py::arg("oracle_limit") = "1099511627776",
      "Point count through the degree-p subcover.");

  m.def(
      "l_polynomial",
      [](long p, int t, int n) { return poly_to_py(gs::l_polynomial_ext({p, t}, n)); },
      py::arg("p"), py::arg("t"), py::arg("n") = 1,
      "L-polynomial coefficients over F_{q^n}, ascending degree.");

  m.def(
      "jacobian_order",
      [](long p, int t, int n) { return to_py(gs::jacobian_order({p, t}, n)); }, py::arg("p"),
      py::arg("t"), py::arg("n") = 1, "Order of J(F_{q^n}) = L(1).");

  m.def(
      "jacobian_note",
      [](long p, int t) -> py::object {
        auto note = gs::jacobian_discrepancy_note({p, t});
        if (!note) return py::none();
        return py::str(*note);
      },
      py::arg("p"), py::arg("t"), "Documented discrepancy note, if any.");

  m.def(
      "period", [](long p, int t) { return gs::period({p, t}); }, py::arg("p"), py::arg("t"),
      "Period of the normalized Weil numbers.");

  m.def(
      "cover_table",
      [](long p, int t, int n, const std::string& max_degree, long prime_cap) {
        py::list out;
        for (const gs::CoverReport& rep :
             gs::cover_table({p, t}, n, gs::Int(max_degree), prime_cap)) {
          py::dict d;
          d["n"] = rep.n;
          d["degree"] = to_py(rep.degree);
          d["genus"] = to_py(rep.genus);
          d["point_bound"] = to_py(rep.point_bound);
          out.append(d);
        }
        return out;
      },
      py::arg("p"), py::arg("t"), py::arg("n"), py::arg("max_degree") = "64",
      py::arg("prime_cap") = 1000000, "Etale cover table from the L(1) ratio.");

  m.def(
      "voloch_precondition",
      [](long p, int t, int n) { return gs::voloch_precondition({p, t}, n); }, py::arg("p"),
      py::arg("t"), py::arg("n"));

  m.def(
      "gauss_sum_coords",
      [](long p) {
        py::list out;
        gs::CycloElement g = gs::gauss_sum(p);
        for (const gs::Rat& c : g.coords()) out.append(c.get_str());
        return out;
      },
      py::arg("p"), "Gauss sum over the power basis of Q(zeta_p), as fraction strings.");

  m.def(
      "scaled_mp", [](long p) { return poly_to_py(gs::scaled_mp(p)); }, py::arg("p"),
      "Coefficients of p^((p-1)/2) M_p, ascending degree.");

  m.def(
      "verify_mp_factorization", [](long p) { return gs::verify_mp_factorization(p); },
      py::arg("p"));

  m.def(
      "newton_counts",
      [](const std::vector<std::string>& coeffs, const std::string& q, long g, long n) {
        std::vector<gs::Int> c;
        for (const std::string& s : coeffs) c.emplace_back(s);
        return to_py(gs::newton_counts(gs::IntPoly(std::move(c)), gs::Int(q), g, n));
      },
      py::arg("coefficients"), py::arg("q"), py::arg("g"), py::arg("n"),
      "N_{q^n} from L-polynomial coefficients (decimal strings, ascending).");

  m.def(
      "aut_group_audit",
      [](long p, int t, std::uint64_t seed) {
        gs::AutAuditReport rep = gs::aut_group_audit({p, t}, seed);
        py::dict d;
        d["order"] = to_py(rep.order);
        d["sylow_order"] = to_py(rep.sylow_order);
        d["cyclic_order"] = to_py(rep.cyclic_order);
        d["exhaustive_pairs"] = rep.exhaustive_pairs;
        d["ok"] = rep.ok;
        d["failures"] = rep.failures;
        return d;
      },
      py::arg("p"), py::arg("t"), py::arg("seed") = 0, "Automorphism group audit.");

  m.def(
      "verify",
      [](long p, int t, int n_max, std::uint64_t seed, int samples, int threads,
         const std::string& limit) {
        gs::VerifyOptions opts;
        opts.n_max = n_max;
        opts.seed = seed;
        opts.samples = samples;
        opts.counter = options_from(threads, limit);
        gs::VerifyReport rep = gs::run_verification({p, t}, opts);
        py::list checks;
        for (const gs::VerifyCheck& chk : rep.checks) {
          py::dict d;
          d["check"] = chk.name;
          d["n"] = chk.n;
          d["ok"] = chk.ok;
          d["detail"] = chk.detail;
          checks.append(d);
        }
        py::dict d;
        d["ok"] = rep.ok;
        d["checks"] = checks;
        return d;
      },
      py::arg("p"), py::arg("t"), py::arg("n_max") = 8, py::arg("seed") = 0,
      py::arg("samples") = 25, py::arg("threads") = 0,
      py::arg("oracle_limit") = "1099511627776", "Full cross-check battery.");
}
