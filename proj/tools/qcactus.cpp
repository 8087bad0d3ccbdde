#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <thread>

#include "qcactus/coxeter/coxeter.hpp"
#include "qcactus/crystal/crystal.hpp"
#include "qcactus/gkmodel/gkmodel.hpp"
#include "qcactus/qarith/json_io.hpp"
#include "qcactus/repmodule/operators.hpp"
#include "qcactus/suites/suites.hpp"

namespace {

using json = nlohmann::json;
using namespace qcactus;
using suites::Check;

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
  f << j.dump(2) << "\n";
  if (!f) throw std::runtime_error("write to '" + out + "' failed");
}

int report(const json& config, const std::vector<Check>& checks, const std::string& out) {
  emit(suites::make_report(config, checks), out);
  return suites::all_passed(checks) ? 0 : 1;
}

json words(const coxeter::CoxeterDatum& d, const std::vector<coxeter::GroupElement>& elems) {
  json out = json::array();
  for (const auto& w : elems) out.push_back(d.reduced_word(w));
  return out;
}

json dense_json(const repmodule::Module& mod, const repmodule::BlockOperator& op) {
  const repmodule::RfMatrix m = op.dense();
  json basis = json::array(), rows = json::array();
  for (const auto& p : mod.basis()) basis.push_back(crystal::format_pattern(p));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(qarith::to_json(m(r, c)));
    rows.push_back(row);
  }
  return json{{"basis", basis}, {"matrix", rows}};
}

repmodule::BlockOperator named_operator(const repmodule::Module& mod, const std::string& name) {
  using repmodule::Sign;
  if (name == "N1" || name == "N2") return repmodule::matrix_N(mod, name[1] - '0');
  if (name == "C1" || name == "C2") return repmodule::matrix_C(mod, name[1] - '0');
  if (name == "P1" || name == "P2") return repmodule::matrix_P(mod, name[1] - '0');
  if (name == "sigma1" || name == "sigma2") return repmodule::sigma_string_operator(mod, name[5] - '0');
  if (name == "sigmaI") return repmodule::sigma_J_operator(mod, {1, 2}, Sign::Plus);
  if (name.size() == 3 && name[0] == 'T' && (name[1] == '1' || name[1] == '2') && (name[2] == '+' || name[2] == '-'))
    return repmodule::lusztig_T_operator(mod, name[1] - '0', name[2] == '+' ? Sign::Plus : Sign::Minus);
  if (name.size() == 2 && (name[0] == 'E' || name[0] == 'F') && (name[1] == '1' || name[1] == '2')) {
    const auto kind = name[0] == 'E' ? repmodule::Gen::E : repmodule::Gen::F;
    const int i = name[1] - '0';
    return repmodule::BlockOperator::from_basis_map(
        mod, [&](const crystal::Pattern& m) { return repmodule::act_divided_basis(mod, i, kind, 1, m); });
  }
  throw std::invalid_argument("unknown operator '" + name + "'");
}

std::vector<Check> module_checks(int l1, int l2) {
  const repmodule::Module mod(l1, l2);
  std::vector<Check> out;
  out.push_back(suites::run_check("quantum relations", "[E_i,F_j], Serre, divided powers",
                                  [&]() -> std::optional<json> {
                                    const auto rep = repmodule::quantum_relations_check(mod);
                                    if (rep.ok) return std::nullopt;
                                    return json{{"relation", rep.relation}, {"witness", rep.witness}};
                                  }));
  out.push_back(suites::run_check("conjecture", "(N^1)^2 = (N^2)^2 = (N^1 N^2)^3 = 1", [&]() -> std::optional<json> {
    const auto r = repmodule::conjecture_check(mod);
    if (r.ok()) return std::nullopt;
    return json{{"n1_involution", r.n1_involution}, {"n2_involution", r.n2_involution}, {"braid", r.braid}};
  }));
  for (int i = 1; i <= 2; ++i) {
    out.push_back(suites::run_check("sigma^" + std::to_string(i) + " agreement", "sigma_string = N^i = sigma^{i}",
                                    [&, i]() -> std::optional<json> {
                                      const auto n = repmodule::matrix_N(mod, i);
                                      if (repmodule::sigma_string_operator(mod, i) != n) return json("sigma_string");
                                      for (auto s : {repmodule::Sign::Plus, repmodule::Sign::Minus})
                                        if (repmodule::sigma_J_operator(mod, {i}, s) != n) return json("sigma_J");
                                      return std::nullopt;
                                    }));
    out.push_back(suites::run_check("crystal compatibility " + std::to_string(i), "N^i permutes B modulo v",
                                    [&, i]() -> std::optional<json> {
                                      if (auto w = repmodule::crystal_compatibility(mod, i)) return json(*w);
                                      return std::nullopt;
                                    }));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification tools for sl3 cactus actions"};
  app.require_subcommand(1);
  std::string out;

  int max_degree = 8;
  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  auto* verify = app.add_subcommand("verify-conjecture", "Check (N^1)^2 = (N^2)^2 = (N^1 N^2)^3 = 1 on all V_lambda");
  verify->add_option("--max-degree", max_degree, "Largest l1 + l2")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", out, "Report path (default: stdout)");

  auto* cox = app.add_subcommand("coxeter", "Coxeter group tools");
  cox->require_subcommand(1);
  std::string type, subset;
  auto* kernel = cox->add_subcommand("kernel", "Kernel of W acting on W/W_J, by formula and brute force");
  kernel->add_option("--type", type, "Type, e.g. A2, B3, A1xA2")->required();
  kernel->add_option("--subset", subset, "J as a comma-separated list (empty for J = {})");
  kernel->add_option("--out", out, "Report path (default: stdout)");

  auto* cry = app.add_subcommand("crystal", "Crystal combinatorics");
  cry->require_subcommand(1);
  std::string pattern, ops;
  auto* apply = cry->add_subcommand("apply", "Apply operators (rightmost first) to a pattern");
  apply->add_option("--pattern", pattern, "m1,m2,m12,m21,m01,m02")->required();
  apply->add_option("--ops", ops, "e.g. sigma,sigma1,e2^-3")->required();

  auto* mod = app.add_subcommand("module", "The module V_lambda");
  mod->require_subcommand(1);
  int l1 = 1, l2 = 1;
  std::string op_name = "N1";
  auto* mverify = mod->add_subcommand("verify", "Run the per-module checks");
  auto* mexport = mod->add_subcommand("export", "Export an operator as a dense matrix");
  for (auto* sc : {mverify, mexport}) {
    sc->add_option("--l1", l1, "Coefficient of omega_1")->check(CLI::NonNegativeNumber);
    sc->add_option("--l2", l2, "Coefficient of omega_2")->check(CLI::NonNegativeNumber);
    sc->add_option("--out", out, "Output path (default: stdout)");
  }
  mexport->add_option("--op", op_name, "N1 N2 C1 C2 P1 P2 sigma1 sigma2 sigmaI T1+ T1- T2+ T2- E1 E2 F1 F2");

  auto* gk = app.add_subcommand("gk", "The Gelfand-Kirillov model");
  gk->require_subcommand(1);
  std::string expr;
  auto* nf = gk->add_subcommand("normalform", "Normal-order a product of generators");
  nf->add_option("--expr", expr, "e.g. \"q^{-1/2}*z2*z1^2*v1\"")->required();

  std::string suite_name = "all";
  std::uint64_t seed = 1;
  auto* suite = app.add_subcommand("suite", "Seeded property suites");
  suite->add_option("--name", suite_name, "qarith, coxeter, crystal, module, gk or all")
      ->check(CLI::IsMember({"qarith", "coxeter", "crystal", "module", "gk", "all"}));
  suite->add_option("--seed", seed, "Random seed");
  suite->add_option("--out", out, "Report path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      const json config{{"command", "verify-conjecture"}, {"max_degree", max_degree}, {"jobs", jobs}};
      return report(config, suites::conjecture_sweep(max_degree, jobs), out);
    }
    if (kernel->parsed()) {
      const auto d = coxeter::CoxeterDatum::parse(type);
      const coxeter::SubsetJ j = coxeter::parse_subset(subset);
      const auto formula = d.kernel_parabolic(j, coxeter::KernelMode::Formula);
      const auto brute = d.kernel_parabolic(j, coxeter::KernelMode::BruteForce);
      Check c = suites::run_check("kernel " + type + " J={" + coxeter::format_subset(j) + "}",
                                  "kernel of W on W/W_J: formula = brute force", [&]() -> std::optional<json> {
                                    if (formula == brute) return std::nullopt;
                                    return json{{"formula", words(d, formula)}, {"brute_force", words(d, brute)}};
                                  });
      c.details = json{{"order", formula.size()}, {"formula", words(d, formula)}, {"brute_force", words(d, brute)}};
      return report(json{{"command", "coxeter kernel"}, {"type", type}, {"subset", subset}}, {c}, out);
    }
    if (apply->parsed()) {
      const crystal::Pattern m = crystal::parse_pattern(pattern);
      const crystal::Pattern r = crystal::apply_ops(ops, m);
      emit(json{{"pattern", crystal::format_pattern(m)}, {"ops", ops}, {"result", crystal::format_pattern(r)},
                {"weight", {crystal::wt(1, r), crystal::wt(2, r)}}},
           "");
      return 0;
    }
    if (mverify->parsed()) {
      return report(json{{"command", "module verify"}, {"l1", l1}, {"l2", l2}}, module_checks(l1, l2), out);
    }
    if (mexport->parsed()) {
      const repmodule::Module m(l1, l2);
      json j = dense_json(m, named_operator(m, op_name));
      j["l1"] = l1;
      j["l2"] = l2;
      j["op"] = op_name;
      emit(j, out);
      return 0;
    }
    if (nf->parsed()) {
      emit(gkmodel::to_json(gkmodel::parse_expr(expr)), "");
      return 0;
    }
    if (suite->parsed()) {
      const json config{{"command", "suite"}, {"name", suite_name}, {"seed", seed}};
      return report(config, suites::run_suite(suite_name, seed), out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
