#include "latred/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "latred/corpus.hpp"
#include "latred/cvp.hpp"
#include "latred/reference.hpp"

namespace latred {

namespace {

struct GenOptions {
  std::string kind = "uniform";
  std::size_t n = 2;
  std::size_t m = 0;
  unsigned bits = 3;
  std::uint64_t seed = 0;
  std::string gamma = "1";
  std::string slack = "1/2";
  std::string out;
};

struct SolveOptions {
  std::string instance;
  std::string oracle = "exact";
  std::string trace;
  std::string output;
  bool no_check = false;
};

struct CheckOptions {
  std::string instance;
  std::string answer;
};

struct CorpusOptions {
  std::string dir;
  bool write_expectations = false;
};

std::string vec(const RationalVector& v) { return to_string(v); }

std::string ints(const IntVector& x) {
  return to_string(RationalVector::from_integers(x));
}

RationalVector require_target(const InstanceFile& inst) {
  if (!inst.target) throw ParseError("instance has no target vector");
  return *inst.target;
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  GeneratorSpec spec;
  spec.kind = parse_generator_kind(o.kind);
  spec.n = o.n;
  spec.m = o.m == 0 ? o.n : o.m;
  spec.entry_bits = o.bits;
  spec.seed = o.seed;
  spec.gamma = parse_rational(o.gamma);
  spec.bdd_slack = parse_rational(o.slack);
  const std::string text = serialize_instance(generate(spec));
  if (o.out.empty())
    out << text;
  else
    write_text(o.out, text);
  return kExitOk;
}

int cmd_svp(const SolveOptions& o, std::ostream& out) {
  const InstanceFile inst = read_instance(o.instance);
  const OracleSpec spec = OracleSpec::parse(o.oracle, inst.n());
  const SvpOracleResult res = oracle_query(spec, inst.basis);
  out << "vector = " << vec(res.vector.coords) << "\n"
      << "coeffs = " << ints(res.vector.coeffs) << "\n"
      << "norm2 = " << to_string(norm_sq(res.vector.coords)) << "\n"
      << "gamma2 = " << to_string(res.gamma_sq) << "\n";
  return kExitOk;
}

int cmd_cvp(const SolveOptions& o, std::ostream& out) {
  const InstanceFile inst = read_instance(o.instance);
  const OracleSpec spec = OracleSpec::parse(o.oracle, inst.n());
  const CvpResult res = cvp_solve({inst.basis, require_target(inst), spec});
  out << "answer = " << vec(res.answer.coords) << "\n"
      << "coeffs = " << ints(res.answer.coeffs) << "\n"
      << "dist2 = " << to_string(res.dist_sq_achieved) << "\n"
      << "bound_factor2 = " << to_string(res.bound_factor_sq) << "\n"
      << "M = " << res.trace.input_size << "\n"
      << "max_bits = " << collect_bit_stats(res.trace) << "\n";
  if (!o.trace.empty()) write_text(o.trace, res.trace.serialize());
  if (!o.output.empty()) write_text(o.output, serialize_answer(res.answer.coords));

  if (o.no_check || inst.n() > EnumerationBudget{}.max_dim) {
    out << "status = unchecked\n";
    return kExitOk;
  }
  const Rational optimum = brute_distance_sq(inst.basis, *inst.target);
  out << "optimum2 = " << to_string(optimum) << "\n";
  if (res.dist_sq_achieved <= res.bound_factor_sq * optimum) {
    out << "status = bound-ok\n";
    return kExitOk;
  }
  out << "status = bound-violated\n";
  return kExitViolation;
}

int cmd_bdd(const SolveOptions& o, std::ostream& out) {
  const InstanceFile inst = read_instance(o.instance);
  const OracleSpec spec = OracleSpec::parse(o.oracle, inst.n());
  const RationalVector t = require_target(inst);
  const BddOutcome res = solve_bdd(inst.basis, t, spec);
  out << "candidate = " << vec(res.candidate.coords) << "\n"
      << "coeffs = " << ints(res.candidate.coeffs) << "\n"
      << "dist2 = " << to_string(norm_sq(res.candidate.coords - t)) << "\n"
      << "certified = " << (res.promise_certified ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_check(const CheckOptions& o, std::ostream& out) {
  const InstanceFile inst = read_instance(o.instance);
  const RationalVector t = require_target(inst);
  const RationalVector z = parse_answer(read_text(o.answer));
  if (z.dim() != inst.m()) throw ParseError("answer dimension differs from the instance");
  if (!is_member(inst.basis, z)) {
    out << "not a lattice member\n";
    return kExitViolation;
  }
  const Rational dist = norm_sq(z - t);
  out << "member = true\n" << "dist2 = " << to_string(dist) << "\n";
  if (inst.n() > EnumerationBudget{}.max_dim) {
    out << "status = unchecked\n";
    return kExitOk;
  }
  const Rational g2 = inst.gamma * inst.gamma;
  const Rational bound = g2 * g2 * Rational(inst.n()) * brute_distance_sq(inst.basis, t);
  out << "bound2 = " << to_string(bound) << "\n";
  if (dist <= bound) {
    out << "status = bound-ok\n";
    return kExitOk;
  }
  out << "status = bound-violated\n";
  return kExitViolation;
}

int cmd_corpus(const CorpusOptions& o, std::ostream& out) {
  const std::filesystem::path dir(o.dir);
  if (o.write_expectations) {
    const auto exp = build_expectations(dir);
    write_text(dir / kExpectationsFile, serialize_expectations(exp));
    out << "wrote expectations for " << exp.size() << " instances\n";
    return kExitOk;
  }
  const CorpusReport report = run_corpus(dir);
  for (const auto& r : report.runs)
    out << r.file << " oracle=" << r.oracle << " dist2=" << to_string(r.dist_sq)
        << " bound2=" << to_string(r.bound_sq) << " bits=" << r.bits << "/" << r.bit_gate << " "
        << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& f : report.lambda_mismatches) out << f << " lambda1 mismatch FAIL\n";
  out << "corpus: " << report.instances << " instances, " << report.runs.size() << " runs, "
      << report.failures() << " failures, max_bits=" << report.max_bits << "\n";
  return report.failures() == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice toolkit: CVP through an SVP oracle"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance file");
  gen_cmd->add_option("--kind", gen.kind, "uniform | planted-bdd | planted-cvp");
  gen_cmd->add_option("--n", gen.n, "lattice rank")->required();
  gen_cmd->add_option("--m", gen.m, "ambient dimension (default n)");
  gen_cmd->add_option("--bits", gen.bits, "entry bit size");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--gamma", gen.gamma, "oracle quality recorded in the file");
  gen_cmd->add_option("--slack", gen.slack, "planted-bdd offset as a fraction of lambda_1/(2 gamma)");
  gen_cmd->add_option("--out", gen.out, "output path (stdout if omitted)");

  SolveOptions solve;
  auto* svp_cmd = app.add_subcommand("svp", "Query an SVP oracle");
  auto* cvp_cmd = app.add_subcommand("cvp", "Solve approximate CVP by the oracle reduction");
  auto* bdd_cmd = app.add_subcommand("bdd", "Solve BDD through the embedding");
  for (auto* cmd : {svp_cmd, cvp_cmd, bdd_cmd}) {
    cmd->add_option("--instance", solve.instance, "instance file")->required();
    cmd->add_option("--oracle", solve.oracle, "exact | lll | adversarial:<gamma>:<seed>");
  }
  cvp_cmd->add_option("--emit-trace", solve.trace, "write the reduction trace here");
  cvp_cmd->add_option("--output", solve.output, "write the answer file here");
  cvp_cmd->add_flag("--no-check", solve.no_check, "skip the brute-force bound check");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Validate an answer against an instance");
  check_cmd->add_option("--instance", check.instance, "instance file")->required();
  check_cmd->add_option("--answer", check.answer, "answer file")->required();

  CorpusOptions corpus;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run the regression corpus");
  corpus_cmd->add_option("--dir", corpus.dir, "corpus directory")->required();
  corpus_cmd->add_flag("--write-expectations", corpus.write_expectations,
                       "recompute brute-force expectations instead of checking");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (svp_cmd->parsed()) return cmd_svp(solve, out);
    if (cvp_cmd->parsed()) return cmd_cvp(solve, out);
    if (bdd_cmd->parsed()) return cmd_bdd(solve, out);
    if (check_cmd->parsed()) return cmd_check(check, out);
    if (corpus_cmd->parsed()) return cmd_corpus(corpus, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace latred
