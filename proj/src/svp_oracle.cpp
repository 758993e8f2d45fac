#include "latred/svp_oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "enumeration.hpp"
#include "latred/lll.hpp"

namespace latred {

OracleSpec OracleSpec::lll(std::size_t n) {
  if (n == 0) throw std::invalid_argument("lll oracle needs a positive dimension");
  OracleSpec spec;
  spec.kind = OracleKind::lll;
  Integer g = 1;
  g <<= static_cast<mp_bitcnt_t>(n - 1);
  spec.gamma_sq = Rational(g);
  return spec;
}

OracleSpec OracleSpec::adversarial(const Rational& gamma, std::uint64_t seed) {
  if (gamma < 1) throw std::invalid_argument("oracle quality gamma must be >= 1");
  OracleSpec spec;
  spec.kind = OracleKind::adversarial;
  spec.gamma_sq = gamma * gamma;
  spec.seed = seed;
  return spec;
}

OracleSpec OracleSpec::parse(std::string_view text, std::size_t dim) {
  if (text == "exact") return exact();
  if (text == "lll") return lll(dim);
  constexpr std::string_view prefix = "adversarial:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view rest = text.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("expected adversarial:<gamma>:<seed>");
    const Rational gamma = parse_rational(rest.substr(0, colon));
    const std::string seed_text(rest.substr(colon + 1));
    if (seed_text.empty() || seed_text.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed oracle seed '" + seed_text + "'");
    return adversarial(gamma, std::stoull(seed_text));
  }
  throw std::invalid_argument("unknown oracle '" + std::string(text) + "'");
}

std::string OracleSpec::to_string() const {
  switch (kind) {
    case OracleKind::exact:
      return "exact";
    case OracleKind::lll:
      return "lll";
    case OracleKind::adversarial: {
      // gamma_sq came from a rational gamma, so its square root is exact.
      const Integer num = isqrt(Integer(gamma_sq.get_num()));
      const Integer den = isqrt(Integer(gamma_sq.get_den()));
      return "adversarial:" + latred::to_string(make_rational(num, den)) + ":" +
             std::to_string(seed);
    }
  }
  return "exact";
}

bool gamma_below_exponential(const Rational& gamma_sq, std::size_t n) {
  Integer bound = 1;
  bound <<= static_cast<mp_bitcnt_t>(2 * n);
  return gamma_sq < Rational(bound);
}

LatticeVector sign_normalized(LatticeVector v) {
  for (const auto& c : v.coeffs) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& x : v.coeffs) x = -x;
      v.coords *= Rational(-1);
    }
    break;
  }
  return v;
}

namespace {

void require_enumerable(const LatticeBasis& basis, std::size_t max_dim) {
  if (basis.n() > max_dim)
    throw std::invalid_argument("dimension " + std::to_string(basis.n()) +
                                " exceeds the enumeration limit " + std::to_string(max_dim));
}

IntVector to_input_coeffs(const IntVector& y, const std::vector<IntVector>& transform) {
  IntVector x(transform.front().size(), 0);
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[j] * transform[j][i];
  }
  return x;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Origin-centred search on the LLL-reduced basis; results are expressed in
// the input basis, sign-normalized.
std::vector<LatticeVector> short_vectors(const LatticeBasis& basis, const Rational& radius_sq,
                                         bool shrink_to_minimum) {
  const LllResult reduced = lll_with_transform(basis);
  const GramSchmidt gs = gram_schmidt_data(reduced.basis.matrix());

  std::vector<IntVector> found;
  Rational best = radius_sq;
  detail::EnumerationRequest req;
  req.gs = &gs;
  req.radius_sq = radius_sq;
  req.half_space = true;
  detail::enumerate(req, [&](const IntVector& y, const Rational& dist_sq) -> std::optional<Rational> {
    if (shrink_to_minimum && dist_sq < best) {
      best = dist_sq;
      found.clear();
      found.push_back(y);
      return best;
    }
    found.push_back(y);
    return std::nullopt;
  });

  std::vector<LatticeVector> out;
  out.reserve(found.size());
  for (const auto& y : found)
    out.push_back(sign_normalized(LatticeVector::from_coeffs(basis, to_input_coeffs(y, reduced.transform))));
  std::sort(out.begin(), out.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return lex_less(a.coeffs, b.coeffs); });
  return out;
}

Rational shortest_column_norm_sq(const LatticeBasis& basis) {
  Rational best = norm_sq(basis.column(0));
  for (std::size_t j = 1; j < basis.n(); ++j) best = std::min(best, norm_sq(basis.column(j)));
  return best;
}

}  // namespace

LatticeVector enumerate_shortest(const LatticeBasis& basis, std::size_t max_dim) {
  require_enumerable(basis, max_dim);
  auto candidates = short_vectors(basis, shortest_column_norm_sq(basis), true);
  if (candidates.empty()) throw std::logic_error("enumeration found no nonzero vector");
  for (auto& c : candidates) {
    const auto lead = std::find_if(c.coords.begin(), c.coords.end(),
                                   [](const Rational& x) { return x != 0; });
    if (*lead < 0) {
      c.coords *= Rational(-1);
      for (auto& x : c.coeffs) x = -x;
    }
  }
  return *std::max_element(candidates.begin(), candidates.end(),
                           [](const LatticeVector& a, const LatticeVector& b) {
                             return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                                                 b.coords.begin(), b.coords.end());
                           });
}

std::vector<LatticeVector> enumerate_short_vectors(const LatticeBasis& basis,
                                                   const Rational& radius_sq,
                                                   std::size_t max_dim) {
  require_enumerable(basis, max_dim);
  return short_vectors(basis, radius_sq, false);
}

namespace {

LatticeVector adversarial_choice(const OracleSpec& spec, const LatticeBasis& basis) {
  const Rational lambda1_sq = norm_sq(enumerate_shortest(basis).coords);
  const auto within = enumerate_short_vectors(basis, spec.gamma_sq * lambda1_sq);

  Rational longest = -1;
  std::vector<const LatticeVector*> ties;
  for (const auto& v : within) {
    if (!is_elementary(v)) continue;
    const Rational len = norm_sq(v.coords);
    if (len > longest) {
      longest = len;
      ties.clear();
    }
    if (len == longest) ties.push_back(&v);
  }
  if (ties.empty()) throw std::logic_error("no elementary vector within the oracle budget");
  std::mt19937_64 rng(spec.seed);
  return *ties[rng() % ties.size()];
}

}  // namespace

SvpOracleResult oracle_query(const OracleSpec& spec, const LatticeBasis& basis) {
  if (spec.gamma_sq < 1) throw std::invalid_argument("oracle quality gamma must be >= 1");
  switch (spec.kind) {
    case OracleKind::exact:
      return {enumerate_shortest(basis), Rational(1)};
    case OracleKind::lll: {
      const LllResult reduced = lll_with_transform(basis);
      LatticeVector first = LatticeVector::from_coeffs(basis, reduced.transform.front());
      return {sign_normalized(make_elementary(basis, first)), OracleSpec::lll(basis.n()).gamma_sq};
    }
    case OracleKind::adversarial:
      return {adversarial_choice(spec, basis), spec.gamma_sq};
  }
  throw std::invalid_argument("unknown oracle kind");
}

}  // namespace latred
