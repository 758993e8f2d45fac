#pragma once

// Depth-first Schnorr-Euchner enumeration over a Gram-Schmidt frame. Internal
// to the svp_oracle implementation.

#include <functional>
#include <optional>
#include <vector>

#include "latred/linalg.hpp"

namespace latred::detail {

// Called for every coefficient vector x with ||B x - target||^2 <= radius_sq.
// The callback may return a smaller radius to tighten the search.
using EnumerationVisitor =
    std::function<std::optional<Rational>(const IntVector& x, const Rational& dist_sq)>;

struct EnumerationRequest {
  const GramSchmidt* gs = nullptr;
  // Target in Gram-Schmidt coordinates: tau_i = <t, b*_i> / ||b*_i||^2. Empty
  // means the origin.
  std::vector<Rational> tau;
  // Squared distance of the target to span(B); added to every leaf.
  Rational offset_sq = 0;
  Rational radius_sq;
  // For origin-centred searches: skip x = 0 and visit one of each +-x pair
  // (the one whose last nonzero coefficient is positive).
  bool half_space = false;
};

void enumerate(const EnumerationRequest& request, const EnumerationVisitor& visit);

}  // namespace latred::detail
