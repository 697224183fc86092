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

#include <CLI11.hpp>
#include <iostream>

#include "gsuzuki/json_io.hpp"
#include "gsuzuki/verify.hpp"

namespace {

using gs::Int;
using gs::Json;

// Flat JSON (object or array of objects) to CSV with a stable column order.
std::string to_csv(const Json& j) {
  const Json rows = j.is_array() ? j : Json::array({j});
  if (rows.empty()) return "";
  std::ostringstream os;
  bool first = true;
  for (auto& [key, value] : rows.front().items()) {
    (void)value;
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << "\n";
  for (const Json& row : rows) {
    first = true;
    for (auto& [key, value] : row.items()) {
      (void)key;
      os << (first ? "" : ",");
      if (value.is_string()) {
        os << value.get<std::string>();
      } else {
        os << value.dump();
      }
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

void emit(const Json& j, const std::string& format) {
  if (format == "csv") {
    std::cout << to_csv(j);
  } else {
    std::cout << j.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of generalized Suzuki curves y^q - y = x^(q0)(x^q - x)"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string oracle_limit = "1099511627776";  // 2^40
  std::uint64_t seed = 0;
  int threads = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--oracle-limit", oracle_limit,
                 "largest field size brute-force operations may enumerate");
  app.add_option("--seed", seed, "seed for randomized property checks");
  app.add_option("--threads", threads, "worker threads for enumeration (0 = all)");

  long p = 0;
  int t = 1, n = 1, n_max = 8, samples = 25;
  std::string max_degree = "64";
  long prime_cap = 1000000;
  std::string method = "formula";

  CLI::App* cmd_count = app.add_subcommand("count", "number of rational points over F_{q^n}");
  cmd_count->add_option("--p", p, "odd prime")->required();
  cmd_count->add_option("--t", t, "exponent t (q0 = p^t, q = p^(2t-1))");
  cmd_count->add_option("--n", n, "extension index");
  cmd_count->add_option("--method", method, "route")
      ->check(CLI::IsMember({"formula", "oracle", "decomposition"}));

  CLI::App* cmd_lpoly = app.add_subcommand("lpoly", "L-polynomial over F_{q^n}");
  cmd_lpoly->add_option("--p", p)->required();
  cmd_lpoly->add_option("--t", t);
  cmd_lpoly->add_option("--n", n);

  CLI::App* cmd_jac = app.add_subcommand("jacobian", "order of J(F_{q^n}) = L(1)");
  cmd_jac->add_option("--p", p)->required();
  cmd_jac->add_option("--t", t);
  cmd_jac->add_option("--n", n);

  CLI::App* cmd_max = app.add_subcommand("maximality", "maximality flags for n = 1..n-max");
  cmd_max->add_option("--p", p)->required();
  cmd_max->add_option("--t", t);
  cmd_max->add_option("--n-max", n_max);

  CLI::App* cmd_period = app.add_subcommand("period", "period of the normalized Weil numbers");
  cmd_period->add_option("--p", p)->required();
  cmd_period->add_option("--t", t);

  CLI::App* cmd_covers = app.add_subcommand("covers", "etale cover table from the L(1) ratio");
  cmd_covers->add_option("--p", p)->required();
  cmd_covers->add_option("--t", t);
  cmd_covers->add_option("--n", n)->required();
  cmd_covers->add_option("--max-degree", max_degree);
  cmd_covers->add_option("--prime-cap", prime_cap);

  CLI::App* cmd_verify = app.add_subcommand("verify", "full cross-check battery");
  cmd_verify->add_option("--p", p)->required();
  cmd_verify->add_option("--t", t);
  cmd_verify->add_option("--n-max", n_max);
  cmd_verify->add_option("--samples", samples);

  CLI::App* cmd_aut = app.add_subcommand("aut-check", "automorphism group audit");
  cmd_aut->add_option("--p", p)->required();
  cmd_aut->add_option("--t", t);

  CLI::App* cmd_gauss = app.add_subcommand("gauss", "quadratic Gauss sum in Q(zeta_p)");
  cmd_gauss->add_option("--p", p)->required();

  CLI::App* cmd_mp = app.add_subcommand("mp", "scaled minimal polynomial p^((p-1)/2) M_p");
  cmd_mp->add_option("--p", p)->required();

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    gs::CounterOptions counter;
    counter.threads = threads;
    counter.limit = gs::int_from_decimal(oracle_limit);

    if (app.got_subcommand(cmd_count)) {
      gs::CurveParams c(p, t);
      gs::CountReport rep;
      if (method == "formula") {
        rep = gs::point_count(c, n);
      } else if (method == "oracle") {
        rep.n = n;
        rep.N = gs::brute_force_count(c, n, counter);
        rep.method = gs::CountMethod::oracle;
        rep.maximality = gs::point_count(c, n).maximality;
      } else {
        rep.n = n;
        rep.N = gs::decomposition_count(c, n, counter);
        rep.method = gs::CountMethod::decomposition;
        rep.maximality = gs::point_count(c, n).maximality;
      }
      emit(gs::count_report_to_json(rep), format);
    } else if (app.got_subcommand(cmd_lpoly)) {
      gs::CurveParams c(p, t);
      Json j;
      j["p"] = p;
      j["t"] = t;
      j["n"] = n;
      j["coefficients"] = gs::poly_to_json(gs::l_polynomial_ext(c, n));
      emit(j, format);
    } else if (app.got_subcommand(cmd_jac)) {
      gs::CurveParams c(p, t);
      Json j;
      j["p"] = p;
      j["t"] = t;
      j["n"] = n;
      j["order"] = gs::to_decimal(gs::jacobian_order(c, n));
      if (auto note = gs::jacobian_discrepancy_note(c)) j["note"] = *note;
      emit(j, format);
    } else if (app.got_subcommand(cmd_max)) {
      gs::CurveParams c(p, t);
      Json rows = Json::array();
      for (int i = 1; i <= n_max; ++i) {
        rows.push_back(gs::count_report_to_json(gs::point_count(c, i)));
      }
      emit(rows, format);
    } else if (app.got_subcommand(cmd_period)) {
      gs::CurveParams c(p, t);
      Json j;
      j["p"] = p;
      j["t"] = t;
      j["period"] = gs::period(c);
      emit(j, format);
    } else if (app.got_subcommand(cmd_covers)) {
      gs::CurveParams c(p, t);
      Json rows = Json::array();
      for (const gs::CoverReport& rep :
           gs::cover_table(c, n, gs::int_from_decimal(max_degree), prime_cap)) {
        rows.push_back(gs::cover_report_to_json(rep));
      }
      emit(rows, format);
    } else if (app.got_subcommand(cmd_verify)) {
      gs::CurveParams c(p, t);
      gs::VerifyOptions opts;
      opts.n_max = n_max;
      opts.counter = counter;
      opts.seed = seed;
      opts.samples = samples;
      gs::VerifyReport rep = gs::run_verification(c, opts);
      Json rows = Json::array();
      for (const gs::VerifyCheck& chk : rep.checks) {
        Json j;
        j["check"] = chk.name;
        j["n"] = chk.n;
        j["ok"] = chk.ok;
        if (!chk.detail.empty()) j["detail"] = chk.detail;
        rows.push_back(j);
        if (!chk.ok) {
          std::cerr << "FAIL " << chk.name << " n=" << chk.n << " " << chk.detail << "\n";
        }
      }
      emit(rows, format);
      return rep.ok ? 0 : 1;
    } else if (app.got_subcommand(cmd_aut)) {
      gs::CurveParams c(p, t);
      gs::AutAuditReport rep = gs::aut_group_audit(c, seed);
      Json j;
      j["p"] = p;
      j["t"] = t;
      j["order"] = gs::to_decimal(rep.order);
      j["sylow_order"] = gs::to_decimal(rep.sylow_order);
      j["cyclic_order"] = gs::to_decimal(rep.cyclic_order);
      j["exhaustive_pairs"] = rep.exhaustive_pairs;
      j["ok"] = rep.ok;
      j["failures"] = rep.failures;
      emit(j, format);
      return rep.ok ? 0 : 1;
    } else if (app.got_subcommand(cmd_gauss)) {
      gs::CycloElement g = gs::gauss_sum(p);
      Json j = gs::cyclo_to_json(g);
      j["square"] = gs::to_decimal(Int(gs::legendre(Int(-1), p)) * p);
      emit(j, format);
    } else if (app.got_subcommand(cmd_mp)) {
      Json j;
      j["p"] = p;
      j["scaled_coefficients"] = gs::poly_to_json(gs::scaled_mp(p));
      emit(j, format);
    }
  } catch (const gs::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gs::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
