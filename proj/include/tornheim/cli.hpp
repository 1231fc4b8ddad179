#pragma once

#include <chrono>
#include <iostream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tornheim/errors.hpp"
#include "tornheim/integrals/quadrature.hpp"
#include "tornheim/oracle/direct_sum.hpp"
#include "tornheim/oracle/verify.hpp"
#include "tornheim/reduction.hpp"

namespace tornheim {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerifyFailed = 2, kExitNoConvergence = 3 };

inline nlohmann::json reduction_json(const TornheimIndex& idx, const SymbolicCombo& c) {
  return {{"index", {idx.m, idx.k, idx.n}}, {"weight", idx.weight()}, {"terms", c.to_json()}};
}

namespace detail {

inline void check_format(const std::string& f) {
  if (f != "text" && f != "json") throw DomainError("unknown format '" + f + "' (text or json)");
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/*
 * Command-line front end. Subcommands:
 *
 *   reduce M K N [--ystar] [--format text|json]
 *   eval M K N [--digits D] [--format text|json]
 *   direct A B C [--digits D]
 *   table --weight N [--format text|json]
 *   verify M K N [--digits D] [--tol T] [--format text|json]
 *   bench --weight N [--digits D]
 *
 * Exit codes: 0 success, 1 usage or domain error, 2 verification failure,
 * 3 numeric non-convergence.
 */
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact reduction and numeric evaluation of Tornheim double sums T(m,k,n)"};
  app.require_subcommand(1);

  int m = 0, k = 0, n = 0, weight = 0, digits = 0;
  std::string format = "text", tol_text = "1e-10";
  std::string a_text, b_text, c_text;
  bool ystar = false;

  auto add_index = [&](CLI::App* sub) {
    sub->add_option("M", m, "first exponent")->required();
    sub->add_option("K", k, "second exponent")->required();
    sub->add_option("N", n, "exponent of r+s")->required();
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce T(M,K,N) over the generating set");
  add_index(reduce_cmd);
  reduce_cmd->add_flag("--ystar", ystar, "rewrite basis sums as Y* integrals");
  reduce_cmd->add_option("--format", format, "text or json");

  auto* eval_cmd = app.add_subcommand("eval", "numeric value of T(M,K,N) through the reduction");
  add_index(eval_cmd);
  eval_cmd->add_option("--digits", digits, "significant digits (default 30)");
  eval_cmd->add_option("--format", format, "text or json");

  auto* direct_cmd = app.add_subcommand("direct", "direct evaluation of the double series T(A,B,C)");
  direct_cmd->add_option("A", a_text, "first exponent")->required();
  direct_cmd->add_option("B", b_text, "second exponent")->required();
  direct_cmd->add_option("C", c_text, "exponent of r+s")->required();
  direct_cmd->add_option("--digits", digits, "significant digits (default 15)");

  auto* table_cmd = app.add_subcommand("table", "all T(m,k,n), m >= k, of one weight");
  table_cmd->add_option("--weight", weight, "weight N")->required();
  table_cmd->add_option("--format", format, "text or json");

  auto* verify_cmd = app.add_subcommand("verify", "compare the reduction with the direct sum");
  add_index(verify_cmd);
  verify_cmd->add_option("--digits", digits, "significant digits (default 15)");
  verify_cmd->add_option("--tol", tol_text, "absolute tolerance (default 1e-10)");
  verify_cmd->add_option("--format", format, "text or json");

  auto* bench_cmd = app.add_subcommand("bench", "time the reduction and the Y* integrals of one weight");
  bench_cmd->add_option("--weight", weight, "weight N")->required();
  bench_cmd->add_option("--digits", digits, "significant digits (default 15)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    detail::check_format(format);
    const bool json = format == "json";

    if (*reduce_cmd) {
      ReductionResult r = reduce(m, k, n);
      SymbolicCombo c = ystar ? expand_basis(r.combo) : r.combo;
      if (json) {
        out << reduction_json(r.index, c).dump() << "\n";
      } else {
        out << c.to_text() << "\n";
      }
      return kExitOk;
    }

    if (*table_cmd) {
      auto rows = weight_table(weight);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(reduction_json(r.index, r.combo));
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& r : rows) out << r.index.to_string() << " = " << r.combo.to_text() << "\n";
      }
      return kExitOk;
    }

    if (*eval_cmd) {
      NumericContext ctx(digits > 0 ? digits : 30);
      ReductionResult r = reduce(m, k, n);
      ComboEvaluator ev(ctx);
      SymbolicCombo e = expand_basis(r.combo);
      std::string value = ev.evaluate(e).to_string(ctx.digits());
      if (json) {
        nlohmann::json j = reduction_json(r.index, r.combo);
        j["ystar_terms"] = e.to_json();
        j["digits"] = ctx.digits();
        j["value"] = value;
        out << j.dump() << "\n";
      } else {
        out << r.index.to_string() << " = " << r.combo.to_text() << "\n";
        if (!(e == r.combo)) out << "  = " << e.to_text() << "\n";
        out << "  = " << value << "\n";
      }
      return kExitOk;
    }

    if (*direct_cmd) {
      NumericContext ctx(digits > 0 ? digits : 15);
      auto res = oracle::tornheim_direct_detailed(ctx.parse(a_text), ctx.parse(b_text), ctx.parse(c_text), ctx);
      out << res.value.to_string(ctx.digits()) << "\n";
      return kExitOk;
    }

    if (*verify_cmd) {
      NumericContext ctx(digits > 0 ? digits : 15);
      BigReal tol = ctx.parse(tol_text);
      VerifyReport rep = verify(m, k, n, ctx, tol);
      if (json) {
        nlohmann::json j = reduction_json(rep.index, rep.symbolic);
        j["symbolic_value"] = rep.numeric_from_symbolic.to_string(ctx.digits());
        j["direct_value"] = rep.numeric_from_oracle.to_string(ctx.digits());
        j["abs_diff"] = rep.abs_diff.to_string(3);
        j["tolerance"] = rep.tolerance.to_string(3);
        j["pass"] = rep.pass;
        out << j.dump() << "\n";
      } else {
        out << rep.index.to_string() << " = " << rep.symbolic.to_text() << "\n";
        out << "  reduction " << rep.numeric_from_symbolic.to_string(ctx.digits()) << "\n";
        out << "  direct    " << rep.numeric_from_oracle.to_string(ctx.digits()) << "\n";
        out << "  |diff| " << rep.abs_diff.to_string(3) << " tol " << rep.tolerance.to_string(3) << " "
            << (rep.pass ? "PASS" : "FAIL") << "\n";
      }
      return rep.pass ? kExitOk : kExitVerifyFailed;
    }

    if (*bench_cmd) {
      NumericContext ctx(digits > 0 ? digits : 15);
      auto t0 = std::chrono::steady_clock::now();
      auto rows = weight_table(weight);
      out << "weight " << weight << ": " << rows.size() << " reductions in " << detail::seconds_since(t0) << " s\n";
      for (int r = 1; r <= basis_count(weight); ++r) {
        const long before = quad::evaluation_count;
        auto t1 = std::chrono::steady_clock::now();
        BigReal y = integrals::Y_star(2 * r, weight - 2 * r, ctx);
        out << "Ystar(" << 2 * r << "," << weight - 2 * r << ") = " << y.to_string(ctx.digits()) << "  "
            << quad::evaluation_count - before << " evaluations, " << detail::seconds_since(t1) << " s\n";
      }
      return kExitOk;
    }
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tornheim
