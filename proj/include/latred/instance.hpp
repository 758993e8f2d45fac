#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "latred/lattice.hpp"

namespace latred {

// Malformed or inconsistent instance/answer files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON document with rational strings for every exact value:
//   {"m": 2, "n": 2, "basis": [["2","0"],["1","2"]], "target": ["19/10","1/10"],
//    "gamma": "1", "metadata": {"seed": 1, "generator": "planted-bdd",
//    "planted": ["2","0"], "slack": "1/2"}}
// "basis" lists columns. "target" and "planted" are optional.
struct InstanceFile {
  explicit InstanceFile(LatticeBasis b) : basis(std::move(b)) {}

  LatticeBasis basis;
  std::optional<RationalVector> target;
  Rational gamma = 1;
  std::uint64_t seed = 0;
  std::string generator = "manual";
  std::optional<RationalVector> planted;
  std::optional<Rational> slack;

  std::size_t m() const { return basis.m(); }
  std::size_t n() const { return basis.n(); }

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

std::string serialize_instance(const InstanceFile& instance);
InstanceFile parse_instance(std::string_view text);

InstanceFile read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const InstanceFile& instance);

// {"answer": ["1", "0"]}
std::string serialize_answer(const RationalVector& answer);
RationalVector parse_answer(std::string_view text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

struct GeneratorSpec {
  enum class Kind { uniform, planted_bdd, planted_cvp };

  Kind kind = Kind::uniform;
  std::size_t n = 2;
  std::size_t m = 2;
  unsigned entry_bits = 3;
  std::uint64_t seed = 0;
  Rational gamma = 1;
  Rational bdd_slack{1, 2};  // fraction of lambda_1 / (2 gamma) used for the planted offset
};

std::string to_string(GeneratorSpec::Kind kind);
GeneratorSpec::Kind parse_generator_kind(std::string_view text);

// Deterministic in the spec. Throws std::invalid_argument on infeasible specs.
InstanceFile generate(const GeneratorSpec& spec);

// t = p + offset with the brute-force closest vector recorded as the answer.
InstanceFile plant_cvp(const LatticeBasis& basis, const RationalVector& p,
                       const RationalVector& offset);

}  // namespace latred
