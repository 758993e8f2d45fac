#pragma once

// Brute-force ground truth. Kept independent of the svp_oracle enumeration: no
// LLL preprocessing, ascending traversal with exact integer-sqrt bounds.

#include <cstddef>
#include <vector>

#include "latred/lattice.hpp"

namespace latred {

struct EnumerationBudget {
  enum class Strategy { gram_schmidt_pruned, fixed_box };

  std::size_t max_dim = 10;
  Strategy strategy = Strategy::gram_schmidt_pruned;
  long box = 0;  // coefficient bound k for fixed_box: x in [-k, k]^n

  static EnumerationBudget pruned(std::size_t max_dim = 10) { return {max_dim}; }
  static EnumerationBudget fixed_box(long k, std::size_t max_dim = 10) {
    return {max_dim, Strategy::fixed_box, k};
  }
};

// Exact closest vector; ties go to the lexicographically smallest coefficient
// vector.
LatticeVector brute_cvp(const LatticeBasis& basis, const RationalVector& t,
                        const EnumerationBudget& budget = {});

// d^2(t, Lambda(B)).
Rational brute_distance_sq(const LatticeBasis& basis, const RationalVector& t,
                           const EnumerationBudget& budget = {});

// lambda_1^2, ..., lambda_n^2.
std::vector<Rational> successive_minima(const LatticeBasis& basis,
                                        const EnumerationBudget& budget = {});

// lambda_2^2 >= gamma^2 lambda_1^2.
bool verify_usvp_promise(const LatticeBasis& basis, const Rational& gamma,
                         const EnumerationBudget& budget = {});

}  // namespace latred
