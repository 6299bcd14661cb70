#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "continuum/creals.hpp"
#include "continuum/expr.hpp"
#include "continuum/pastar.hpp"
#include "continuum/pseudopoint.hpp"
#include "continuum/subject.hpp"

namespace {

using namespace continuum;

int run_pseudo_eval(const std::string& expr, unsigned dim, const std::string& twist_str) {
  TwistConfig twist;
  try {
    twist.p = Rational::parse(twist_str);
  } catch (const std::exception&) {
    std::cerr << "bad twist parameter: " << twist_str << "\n";
    return 2;
  }
  if (twist.p.sign() <= 0) {
    std::cerr << "twist parameter must be positive\n";
    return 2;
  }
  try {
    PseudoPoint p = eval_pseudo_expr(expr, dim, twist);
    std::cout << p.str() << "\n";
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_subject_run(const std::string& oracle_spec, unsigned stages, const std::string& seq) {
  OraclePtr oracle;
  try {
    oracle = parse_oracle_spec(oracle_spec);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  try {
    if (seq == "kripke") {
      BinarySeq bits = kripke_witness(oracle);
      for (unsigned i = 0; i < stages; ++i) std::cout << i << " " << bits.entry(i) << "\n";
    } else {
      RealGen g = seq == "alpha" ? brouwer_alpha(oracle) : vesley_x(oracle);
      for (unsigned i = 0; i < stages; ++i) std::cout << i << " " << g.approx(i).str() << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int run_subject_probe(const std::string& oracle_spec, unsigned fuel) {
  OraclePtr oracle;
  std::optional<RealGen> probe_x;
  try {
    oracle = parse_oracle_spec(oracle_spec);
    probe_x = vesley_x(oracle);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  const RealGen& x = *probe_x;
  const RealGen zero_gen = const_rational(Rational(0));
  if (auto w = archimedean_probe(x, fuel))
    std::cout << "ARCHIMEDEAN n=" << w->n << "\n";
  else
    std::cout << "NO WITNESS (fuel=" << fuel << ")\n";
  std::cout << "x >∘ 0 " << to_string(measurably_greater(x, zero_gen, fuel)) << "\n";
  std::cout << "x <∘ 0 " << to_string(measurably_smaller(x, zero_gen, fuel)) << "\n";
  return 0;
}

int run_pastar_check(const std::string& path) {
  auto parsed = pastar::parse_proof_file(path);
  if (!parsed.proof) {
    std::cerr << "parse failure, line " << parsed.error->file_line << ": " << parsed.error->reason
              << "\n";
    return 2;
  }
  if (auto e = pastar::check(*parsed.proof)) {
    std::cout << "line " << e->line_index << ": " << e->reason << "\n";
    return 1;
  }
  std::cout << "ok\n";
  return 0;
}

int run_pastar_eliminate(const std::string& in_path, const std::string& out_path) {
  auto parsed = pastar::parse_proof_file(in_path);
  if (!parsed.proof) {
    std::cerr << "parse failure, line " << parsed.error->file_line << ": " << parsed.error->reason
              << "\n";
    return 2;
  }
  if (auto e = pastar::check(*parsed.proof)) {
    std::cout << "line " << e->line_index << ": " << e->reason << "\n";
    return 1;
  }
  const pastar::OmegaReport report = pastar::omega_report(*parsed.proof);
  const pastar::Proof out = pastar::eliminate_omega(*parsed.proof);
  if (auto e = pastar::check(out)) {
    std::cout << "transformed proof failed re-check at line " << e->line_index << ": " << e->reason
              << "\n";
    return 1;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  f << pastar::format_proof(out);
  std::cout << "ok m=" << report.m << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for constructive reals, choice sequences, the"
               " pseudo-continuum, and PA* proof transformation"};
  app.require_subcommand(1);

  // pseudo eval
  auto* pseudo = app.add_subcommand("pseudo", "pseudo-continuum arithmetic");
  pseudo->require_subcommand(1);
  auto* eval = pseudo->add_subcommand("eval", "evaluate an expression and print canonically");
  std::string expr;
  unsigned dim = 2;
  std::string twist = "2";
  eval->add_option("expr", expr, "expression over rationals, e[...], +, -, *")->required();
  eval->add_option("--dim", dim, "coordinate dimension")->check(CLI::PositiveNumber);
  eval->add_option("--twist", twist, "twist parameter p");

  // subject run / probe
  auto* subject = app.add_subcommand("subject", "Creating-Subject constructions");
  subject->require_subcommand(1);
  auto* run = subject->add_subcommand("run", "print a choice-sequence trace");
  std::string oracle_spec;
  unsigned stages = 8;
  std::string seq = "alpha";
  run->add_option("--oracle", oracle_spec, "oracle spec")->required();
  run->add_option("--stages", stages, "number of indices to print")->required();
  run->add_option("--seq", seq, "which sequence")
      ->check(CLI::IsMember({"alpha", "vesley", "kripke"}))
      ->required();
  auto* probe = subject->add_subcommand("probe", "Archimedean probe and order verdicts");
  std::string probe_oracle;
  unsigned fuel = 64;
  probe->add_option("--oracle", probe_oracle, "all-zero oracle spec")->required();
  probe->add_option("--fuel", fuel, "search bound")->required();

  // pastar check / eliminate
  auto* pa = app.add_subcommand("pastar", "PA* proof checking and omega elimination");
  pa->require_subcommand(1);
  auto* chk = pa->add_subcommand("check", "check a proof file");
  std::string chk_path;
  chk->add_option("file", chk_path, "proof file")->required();
  auto* elim = pa->add_subcommand("eliminate", "eliminate omega from a proof file");
  std::string elim_in, elim_out;
  elim->add_option("file", elim_in, "proof file")->required();
  elim->add_option("-o,--output", elim_out, "output file")->required();

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) return run_pseudo_eval(expr, dim, twist);
  if (run->parsed()) return run_subject_run(oracle_spec, stages, seq);
  if (probe->parsed()) return run_subject_probe(probe_oracle, fuel);
  if (chk->parsed()) return run_pastar_check(chk_path);
  if (elim->parsed()) return run_pastar_eliminate(elim_in, elim_out);
  return 1;
}
