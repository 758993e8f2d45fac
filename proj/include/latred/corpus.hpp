#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "latred/instance.hpp"
#include "latred/svp_oracle.hpp"

namespace latred {

inline constexpr const char* kExpectationsFile = "expectations.json";

// Brute-force facts about one corpus instance, frozen when the corpus is built.
struct CorpusExpectation {
  std::string file;
  std::optional<Rational> dist_sq;  // d^2(t, Lambda), absent for SVP-only instances
  Rational lambda1_sq;
  std::size_t input_size = 0;  // M of the integer-scaled basis
  std::size_t bit_gate = 0;    // 64 M^2

  friend bool operator==(const CorpusExpectation&, const CorpusExpectation&) = default;
};

struct CorpusRun {
  std::string file;
  std::string oracle;
  Rational dist_sq;
  Rational bound_sq;  // gamma^4 n d^2
  bool member = false;
  bool bound_ok = false;
  std::size_t bits = 0;
  std::size_t bit_gate = 0;
  bool passed() const { return member && bound_ok && bits <= bit_gate; }
};

struct CorpusReport {
  std::vector<CorpusRun> runs;
  std::vector<std::string> lambda_mismatches;  // files where the two enumerations disagree
  std::size_t instances = 0;
  std::size_t max_bits = 0;
  std::size_t failures() const;
};

std::size_t bit_gate_for(const LatticeBasis& basis);

// Instance files (*.json except the expectations file), sorted by name.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

std::vector<CorpusExpectation> build_expectations(const std::filesystem::path& dir);
std::string serialize_expectations(const std::vector<CorpusExpectation>& expectations);
std::vector<CorpusExpectation> parse_expectations(const std::string& text);

// Oracles each instance is solved with: exact, lll, adversarial 3/2 and 2
// seeded by the instance seed.
std::vector<OracleSpec> corpus_oracles(const InstanceFile& instance);

CorpusReport run_corpus(const std::filesystem::path& dir);

}  // namespace latred
