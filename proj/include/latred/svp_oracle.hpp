#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latred/lattice.hpp"

namespace latred {

enum class OracleKind { exact, lll, adversarial };

// Approximation quality is carried squared: the LLL oracle's 2^{(n-1)/2} is
// irrational for even n, its square never is.
struct OracleSpec {
  OracleKind kind = OracleKind::exact;
  Rational gamma_sq = 1;
  std::uint64_t seed = 0;

  static OracleSpec exact() { return {}; }
  // Declared gamma^2 = 2^{n-1} for an n-dimensional instance.
  static OracleSpec lll(std::size_t n);
  static OracleSpec adversarial(const Rational& gamma, std::uint64_t seed);

  // "exact", "lll", or "adversarial:<gamma>:<seed>". `dim` fixes the declared
  // quality of the lll oracle.
  static OracleSpec parse(std::string_view text, std::size_t dim);
  std::string to_string() const;

  friend bool operator==(const OracleSpec&, const OracleSpec&) = default;
};

struct SvpOracleResult {
  LatticeVector vector;  // nonzero, elementary
  Rational gamma_sq;     // guarantee the oracle claims for this answer
};

inline constexpr std::size_t kDefaultEnumerationLimit = 10;

// True when gamma < 2^n, i.e. gamma^2 < 4^n.
bool gamma_below_exponential(const Rational& gamma_sq, std::size_t n);

SvpOracleResult oracle_query(const OracleSpec& spec, const LatticeBasis& basis);

// A shortest nonzero vector by Gram-Schmidt pruned enumeration on an
// LLL-preprocessed basis. Among all minimizers, signed so the first nonzero
// coordinate is positive, the lexicographically largest coordinate vector wins:
// e_1 on the identity, independent of the basis chosen for the lattice.
LatticeVector enumerate_shortest(const LatticeBasis& basis,
                                 std::size_t max_dim = kDefaultEnumerationLimit);

// All nonzero lattice vectors with norm^2 <= radius_sq, one per +- pair,
// sign-normalized, in lexicographic coefficient order.
std::vector<LatticeVector> enumerate_short_vectors(const LatticeBasis& basis,
                                                   const Rational& radius_sq,
                                                   std::size_t max_dim = kDefaultEnumerationLimit);

// Flips the sign so the first nonzero coefficient is positive.
LatticeVector sign_normalized(LatticeVector v);

}  // namespace latred
