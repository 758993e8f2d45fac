#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latred/bdd.hpp"

namespace latred {

struct CvpInstance {
  LatticeBasis basis;
  RationalVector target;
  OracleSpec oracle;
};

enum class Branch { bdd, recurse, base };

std::string to_string(Branch branch);

// One recursion level. Distances and bit counts refer to the integer-scaled
// working frame of the run.
struct TraceLevel {
  std::size_t dim = 0;
  Rational oracle_vector_norm_sq;  // ||b_1||^2 at the base level
  std::optional<Rational> z1_dist_sq;
  std::optional<Rational> z2_dist_sq;
  Branch branch = Branch::base;
  std::size_t max_entry_bits = 0;
};

struct ReductionTrace {
  std::vector<TraceLevel> levels;
  std::size_t input_size = 0;  // M = max{n, ceil(log2 max_i ||b_i||)} of the scaled input

  // One line per level:
  // level=<k> dim=<n> branch=<bdd|recurse|base> vnorm2=<p/q> z1d2=<p/q|-> z2d2=<p/q|-> bits=<int>
  std::string serialize() const;
};

struct CvpResult {
  LatticeVector answer;
  Rational dist_sq_achieved;
  Rational bound_factor_sq;  // gamma^4 n
  ReductionTrace trace;
};

// a b1 with a = round(<t,b1>/<b1,b1>), exact halves toward -infinity.
LatticeVector cvp_base_case(const RationalVector& b1, const RationalVector& t);

// The recursive CVP-to-SVP reduction. The answer satisfies
// ||z - t||^2 <= gamma^4 n d^2(t, Lambda) whenever the oracle honours gamma.
CvpResult cvp_solve(const CvpInstance& instance);

// Largest numerator/denominator bit length recorded anywhere in the trace.
std::size_t collect_bit_stats(const ReductionTrace& trace);

// M for an integral basis.
std::size_t input_size_parameter(const LatticeBasis& integral_basis);

}  // namespace latred
