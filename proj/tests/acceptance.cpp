// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Every comparison is exact rational
// arithmetic; the only tolerance is the number of violations allowed (zero).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "latred/bdd.hpp"
#include "latred/cli.hpp"
#include "latred/corpus.hpp"
#include "latred/cvp.hpp"
#include "latred/instance.hpp"
#include "latred/lll.hpp"
#include "latred/reference.hpp"

#ifndef LATRED_CORPUS_DIR
#error "LATRED_CORPUS_DIR must point at the regression corpus"
#endif

namespace latred {
namespace {

namespace fs = std::filesystem;

// Minimum sample sizes and allowed violations.
constexpr std::size_t kCvpInstances = 240;    // >= 200
constexpr std::size_t kBddInstances = 216;    // >= 200
constexpr std::size_t kEmbedInstances = 72;   // >= 50
constexpr std::size_t kLemma2Pairs = 120;     // >= 100
constexpr std::size_t kLemma1Pairs = 120;     // >= 100
constexpr std::size_t kLllBases = 150;
constexpr std::size_t kDeterminismRuns = 12;
constexpr std::size_t kAllowedViolations = 0;
constexpr std::size_t kMaxCrossCheckDim = 6;

struct Outcome {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (violations++ == 0) first_failure = what;
  }
};

// Deterministic stream for the sampled instances.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 rng_;
};

std::optional<Rational> exact_sqrt(const Rational& x) {
  const Integer num = isqrt(Integer(x.get_num()));
  const Integer den = isqrt(Integer(x.get_den()));
  if (num * num != x.get_num() || den * den != x.get_den()) return std::nullopt;
  return make_rational(num, den);
}

std::string label(const InstanceFile& inst) {
  return inst.generator + " n=" + std::to_string(inst.n()) + " seed=" + std::to_string(inst.seed);
}

// Uniform and planted-cvp instances, n = 2..6, entry bits 3..8.
std::vector<InstanceFile> cvp_instances() {
  std::vector<InstanceFile> out;
  for (std::size_t i = 0; i < kCvpInstances; ++i) {
    GeneratorSpec spec;
    spec.kind = i % 2 == 0 ? GeneratorSpec::Kind::uniform : GeneratorSpec::Kind::planted_cvp;
    spec.n = 2 + (i / 2) % 5;
    spec.m = spec.n + (i % 7 == 0 ? 1 : 0);
    spec.entry_bits = static_cast<unsigned>(3 + (i / 10) % 6);
    spec.seed = 1000 + i;
    out.push_back(generate(spec));
  }
  return out;
}

std::vector<InstanceFile> bdd_instances(std::size_t count, std::uint64_t seed_base) {
  const std::vector<Rational> slacks{Rational(1, 4), Rational(1, 2), Rational(9, 10)};
  std::vector<InstanceFile> out;
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::planted_bdd;
    spec.n = 2 + (i / 6) % 4;
    spec.m = spec.n;
    spec.entry_bits = static_cast<unsigned>(3 + (i / 24) % 4);
    spec.bdd_slack = slacks[i % 3];
    spec.gamma = (i / 3) % 2 == 0 ? Rational(1) : Rational(2);
    spec.seed = seed_base + i;
    out.push_back(generate(spec));
  }
  return out;
}

OracleSpec bdd_oracle(const InstanceFile& inst) {
  return inst.gamma == 1 ? OracleSpec::exact() : OracleSpec::adversarial(inst.gamma, inst.seed);
}

Outcome criterion_cvp_exact(const std::vector<InstanceFile>& instances) {
  Outcome o;
  for (const auto& inst : instances) {
    const CvpResult r = cvp_solve({inst.basis, *inst.target, OracleSpec::exact()});
    const Rational d_sq = brute_distance_sq(inst.basis, *inst.target);
    o.record(is_member(inst.basis, r.answer.coords) && r.dist_sq_achieved <= Rational(inst.n()) * d_sq,
             label(inst));
  }
  return o;
}

Outcome criterion_cvp_approximate(const std::vector<InstanceFile>& instances) {
  Outcome o;
  for (const auto& inst : instances) {
    const Rational d_sq = brute_distance_sq(inst.basis, *inst.target);
    const std::vector<OracleSpec> oracles{OracleSpec::adversarial(Rational(3, 2), inst.seed),
                                          OracleSpec::adversarial(Rational(2), inst.seed),
                                          OracleSpec::lll(inst.n())};
    for (const auto& spec : oracles) {
      const CvpResult r = cvp_solve({inst.basis, *inst.target, spec});
      const Rational bound = spec.gamma_sq * spec.gamma_sq * Rational(inst.n()) * d_sq;
      o.record(is_member(inst.basis, r.answer.coords) && r.dist_sq_achieved <= bound,
               label(inst) + " oracle=" + spec.to_string());
    }
  }
  return o;
}

Outcome criterion_bdd_exact(const std::vector<InstanceFile>& instances) {
  Outcome o;
  for (const auto& inst : instances) {
    const BddOutcome r = solve_bdd(inst.basis, *inst.target, bdd_oracle(inst));
    const Rational got = norm_sq(r.candidate.coords - *inst.target);
    // Certified means the answer came from the embedding, not the nearest-plane fallback.
    o.record(r.promise_certified && got == brute_distance_sq(inst.basis, *inst.target) &&
                 r.candidate.coords == *inst.planted,
             label(inst) + " slack=" + to_string(*inst.slack) + " gamma=" + to_string(inst.gamma));
  }
  return o;
}

Outcome criterion_embedding(const std::vector<InstanceFile>& instances) {
  Outcome o;
  for (const auto& inst : instances) {
    const RationalVector& t = *inst.target;
    const RationalVector& p = *inst.planted;
    const auto alpha = exact_sqrt(norm_sq(t - p));
    if (!alpha) {
      o.record(false, label(inst) + " planted distance is irrational");
      continue;
    }
    const EmbeddedBasis e = embed(inst.basis, t, *alpha);
    const auto minima = successive_minima(e.base);
    const Rational g2 = inst.gamma * inst.gamma;
    const auto shortest = enumerate_short_vectors(e.base, minima[0]);

    RationalVector expected(inst.m() + 1);
    for (std::size_t i = 0; i < inst.m(); ++i) expected[i] = p[i] - t[i];
    expected[inst.m()] = -*alpha;
    const bool unique = shortest.size() == 1 && (shortest[0].coords == expected ||
                                                 shortest[0].coords == -expected);
    o.record(minima[1] >= g2 * minima[0] && unique && minima[0] == 2 * *alpha * *alpha,
             label(inst) + " gamma=" + to_string(inst.gamma));
  }
  return o;
}

IntVector random_primitive(Draw& draw, std::size_t n, long k) {
  while (true) {
    IntVector x(n);
    for (auto& c : x) c = draw.uniform(-k, k);
    if (coefficient_gcd(x) == 1) return x;
  }
}

Outcome criterion_projection(Draw& draw) {
  Outcome o;
  for (std::size_t i = 0; i < kLemma2Pairs; ++i) {
    GeneratorSpec spec;
    spec.n = static_cast<std::size_t>(draw.uniform(2, 5));
    spec.m = spec.n;
    spec.entry_bits = 4;
    spec.seed = 5000 + i;
    const LatticeBasis b = generate(spec).basis;
    // Half the pairs use a shortest vector, half a random primitive one.
    const LatticeVector v = i % 2 == 0 ? enumerate_shortest(b)
                                       : LatticeVector::from_coeffs(b, random_primitive(draw, spec.n, 3));
    const LatticeBasis projected = project_basis_perp(complete_basis(v, b), v.coords);
    const auto full = successive_minima(b);
    const auto proj = successive_minima(projected);
    bool ok = proj.size() + 1 == full.size();
    for (std::size_t j = 0; ok && j < proj.size(); ++j) ok = proj[j] <= full[j + 1];
    o.record(ok, "n=" + std::to_string(spec.n) + " seed=" + std::to_string(spec.seed));
  }
  return o;
}

Outcome criterion_completion(Draw& draw) {
  Outcome o;
  for (std::size_t i = 0; i < kLemma1Pairs; ++i) {
    GeneratorSpec spec;
    spec.n = static_cast<std::size_t>(draw.uniform(2, 6));
    spec.m = spec.n + static_cast<std::size_t>(draw.uniform(0, 1));
    spec.entry_bits = static_cast<unsigned>(draw.uniform(2, 8));
    spec.seed = 6000 + i;
    const LatticeBasis b = generate(spec).basis;
    const LatticeVector v = LatticeVector::from_coeffs(b, random_primitive(draw, spec.n, 9));
    std::vector<RationalVector> cols{v.coords};
    for (const auto& r : complete_basis(v, b)) cols.push_back(r.coords);
    o.record(cols.size() == b.n() && lattices_equal(LatticeBasis(cols), b),
             "n=" + std::to_string(spec.n) + " seed=" + std::to_string(spec.seed));
  }
  return o;
}

Outcome criterion_lll(Draw& draw) {
  Outcome o;
  const Rational delta(3, 4);
  for (std::size_t i = 0; i < kLllBases; ++i) {
    GeneratorSpec spec;
    spec.n = static_cast<std::size_t>(draw.uniform(2, 6));
    spec.m = spec.n + static_cast<std::size_t>(draw.uniform(0, 2));
    spec.entry_bits = static_cast<unsigned>(draw.uniform(2, 8));
    spec.seed = 7000 + i;
    const LatticeBasis b = generate(spec).basis;
    const LatticeBasis reduced = lll(b);
    Integer two_pow = 1;
    two_pow <<= static_cast<mp_bitcnt_t>(spec.n - 1);
    const Rational lambda1_sq = successive_minima(b)[0];
    o.record(is_size_reduced(reduced) && satisfies_lovasz(reduced, delta) &&
                 lattices_equal(reduced, b) &&
                 norm_sq(reduced.column(0)) <= Rational(two_pow) * lambda1_sq,
             "n=" + std::to_string(spec.n) + " seed=" + std::to_string(spec.seed));
  }
  return o;
}

Outcome criterion_bit_gate(const CorpusReport& report) {
  Outcome o;
  for (const auto& run : report.runs)
    o.record(run.bits <= run.bit_gate, run.file + " oracle=" + run.oracle + " bits=" +
                                           std::to_string(run.bits) + "/" + std::to_string(run.bit_gate));
  return o;
}

Outcome criterion_cross_oracle(const fs::path& dir) {
  Outcome o;
  for (const auto& file : corpus_files(dir)) {
    const InstanceFile inst = read_instance(file);
    if (inst.n() > kMaxCrossCheckDim) continue;
    o.record(norm_sq(enumerate_shortest(inst.basis).coords) == successive_minima(inst.basis)[0],
             file.filename().string());
  }
  return o;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_command(args, out, err);
  return out.str() + "\n--\n" + err.str();
}

Outcome criterion_determinism() {
  Outcome o;
  const fs::path scratch = fs::temp_directory_path() / "latred_acceptance";
  fs::remove_all(scratch);
  fs::create_directories(scratch);
  const std::vector<std::string> kinds{"uniform", "planted-cvp", "planted-bdd"};
  const std::vector<std::string> oracles{"exact", "adversarial:3/2:11", "adversarial:2:12", "lll"};
  for (std::size_t i = 0; i < kDeterminismRuns; ++i) {
    const std::string kind = kinds[i % kinds.size()];
    const std::string n = std::to_string(2 + i % 5);
    const std::string seed = std::to_string(8000 + i);
    std::string files[2], traces[2], outputs[2];
    int codes[2] = {0, 0};
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path inst = scratch / ("inst" + std::to_string(rep) + ".json");
      const fs::path trace = scratch / ("trace" + std::to_string(rep) + ".txt");
      int gen_code = 0;
      run_cli({"gen", "--kind", kind, "--n", n, "--bits", "6", "--seed", seed, "--out", inst.string()},
              gen_code);
      files[rep] = read_text(inst);
      // The instance path appears nowhere in the output, so runs compare byte for byte.
      outputs[rep] = run_cli({"cvp", "--instance", inst.string(), "--oracle", oracles[i % oracles.size()],
                              "--emit-trace", trace.string()},
                             codes[rep]);
      traces[rep] = read_text(trace);
      if (gen_code != kExitOk) codes[rep] = gen_code;
    }
    o.record(codes[0] == kExitOk && codes[1] == kExitOk && files[0] == files[1] &&
                 outputs[0] == outputs[1] && traces[0] == traces[1] && !traces[0].empty(),
             kind + " n=" + n + " seed=" + seed);
  }
  fs::remove_all(scratch);
  return o;
}

}  // namespace
}  // namespace latred

int main() {
  using namespace latred;
  using Clock = std::chrono::steady_clock;
  const std::filesystem::path corpus_dir(LATRED_CORPUS_DIR);

  struct Criterion {
    int id;
    std::string name;
    std::size_t minimum;
    std::function<Outcome()> run;
  };

  const auto cvp_set = cvp_instances();
  const auto bdd_set = bdd_instances(kBddInstances, 2000);
  const auto embed_set = bdd_instances(kEmbedInstances, 4000);
  Draw draw(20240611);
  std::optional<CorpusReport> corpus;
  auto corpus_report = [&]() -> const CorpusReport& {
    if (!corpus) corpus = run_corpus(corpus_dir);
    return *corpus;
  };

  const std::vector<Criterion> criteria{
      {1, "cvp bound, exact oracle: |z-t|^2 <= n d^2", 200, [&] { return criterion_cvp_exact(cvp_set); }},
      {2, "cvp bound, adversarial 3/2, 2 and lll: |z-t|^2 <= gamma^4 n d^2", 600,
       [&] { return criterion_cvp_approximate(cvp_set); }},
      {3, "bdd exactness on planted instances", 200, [&] { return criterion_bdd_exact(bdd_set); }},
      {4, "embedding: unique shortest +-(t'-t, -alpha), lambda2 >= gamma lambda1", 50,
       [&] { return criterion_embedding(embed_set); }},
      {5, "projection: lambda_i(B_perp)^2 <= lambda_{i+1}(B)^2", 100, [&] { return criterion_projection(draw); }},
      {6, "basis completion spans the original lattice", 100, [&] { return criterion_completion(draw); }},
      {7, "lll: size reduced, lovasz 3/4, |b1|^2 <= 2^(n-1) lambda1^2", 100, [&] { return criterion_lll(draw); }},
      {8, "corpus bit gate: max bits <= 64 M^2", 1, [&] { return criterion_bit_gate(corpus_report()); }},
      {9, "determinism: byte-identical files, outputs and traces", kDeterminismRuns,
       [] { return criterion_determinism(); }},
      {10, "cross-oracle lambda1 agreement on the corpus", 1,
       [&] { return criterion_cross_oracle(corpus_dir); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool pass = error.empty() && o.checked >= c.minimum && o.violations <= kAllowedViolations;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s [%zu checked, %zu violations, %.1fs]", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), o.checked, o.violations, secs);
    if (!error.empty()) std::printf(" error: %s", error.c_str());
    if (o.violations > 0) std::printf(" first: %s", o.first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
