#pragma once

#include <cstddef>
#include <vector>

#include "latred/svp_oracle.hpp"

namespace latred {

// The (m+1) x (n+1) embedding [[B, t], [0, alpha]] of a BDD instance.
struct EmbeddedBasis {
  LatticeBasis base;
  Rational alpha;
  LatticeBasis source_basis;
  RationalVector source_target;
};

struct BddOutcome {
  LatticeVector candidate;  // in Lambda(source basis)
  bool promise_certified = false;
};

EmbeddedBasis embed(const LatticeBasis& basis, const RationalVector& t, const Rational& alpha);

// Reads t-dagger off an oracle answer on E.base. Answers whose last coordinate
// is not +-alpha fall back to nearest-plane decoding on the LLL-reduced basis.
BddOutcome extract_bdd_solution(const EmbeddedBasis& embedded, const SvpOracleResult& answer);

// Babai nearest-plane decoding on the basis as given; exact halves round down.
LatticeVector nearest_plane(const LatticeBasis& basis, const RationalVector& t);

// Embedding scales tried when the target distance is unknown: alpha_0 is a
// rational upper bound on sqrt(estimate_sq), alpha_j = alpha_0 (2/3)^j for
// j = 0 .. ceil(n / (2 log2(3/2))) + 1.
std::vector<Rational> alpha_grid(const Rational& estimate_sq, std::size_t n);

// BDD through the embedding. Exact under d(t, Lambda) <= lambda_1 / (2 gamma);
// always returns some lattice vector. Throws when gamma >= 2^n.
BddOutcome solve_bdd(const LatticeBasis& basis, const RationalVector& t, const OracleSpec& spec);

namespace detail {
// solve_bdd without the gamma < 2^n check, for recursion levels whose
// dimension is below the top-level one.
BddOutcome solve_bdd_unchecked(const LatticeBasis& basis, const RationalVector& t,
                               const OracleSpec& spec);
}  // namespace detail

}  // namespace latred
