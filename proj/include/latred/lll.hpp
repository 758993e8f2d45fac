#pragma once

#include <vector>

#include "latred/lattice.hpp"

namespace latred {

struct LllParams {
  Rational delta{3, 4};  // Lovasz parameter, 1/4 < delta < 1
};

struct LllResult {
  LatticeBasis basis;
  // transform[j] holds the coefficients of output column j in the input basis.
  std::vector<IntVector> transform;
};

// Exact rational LLL: size reduction to |mu| <= 1/2 and the Lovasz condition
// ||b*_k||^2 >= (delta - mu_{k,k-1}^2) ||b*_{k-1}||^2.
LllResult lll_with_transform(const LatticeBasis& basis, const LllParams& params = {});
LatticeBasis lll(const LatticeBasis& basis, const LllParams& params = {});

bool is_size_reduced(const LatticeBasis& basis);
bool satisfies_lovasz(const LatticeBasis& basis, const Rational& delta);

}  // namespace latred
