#include "latred/bdd.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "latred/lll.hpp"

namespace latred {

EmbeddedBasis embed(const LatticeBasis& basis, const RationalVector& t, const Rational& alpha) {
  if (alpha <= 0) throw std::invalid_argument("embedding scale alpha must be positive");
  if (t.dim() != basis.m()) throw std::invalid_argument("target dimension differs from basis");
  std::vector<RationalVector> cols;
  cols.reserve(basis.n() + 1);
  for (std::size_t j = 0; j < basis.n(); ++j) {
    RationalVector c(basis.m() + 1);
    for (std::size_t i = 0; i < basis.m(); ++i) c[i] = basis.column(j)[i];
    cols.push_back(std::move(c));
  }
  RationalVector last(basis.m() + 1);
  for (std::size_t i = 0; i < basis.m(); ++i) last[i] = t[i];
  last[basis.m()] = alpha;
  cols.push_back(std::move(last));
  return {LatticeBasis(std::move(cols)), alpha, basis, t};
}

LatticeVector nearest_plane(const LatticeBasis& basis, const RationalVector& t) {
  const GramSchmidt gs = gram_schmidt_data(basis.matrix());
  RationalVector residual = t;
  IntVector x(basis.n(), 0);
  for (std::size_t i = basis.n(); i-- > 0;) {
    x[i] = round_half_down(inner_product(residual, gs.bstar[i]) / gs.bstar_norm_sq[i]);
    if (x[i] != 0) residual.add_scaled(-Rational(x[i]), basis.column(i));
  }
  return LatticeVector::from_coeffs(basis, std::move(x));
}

namespace {

LatticeVector reduced_nearest_plane(const LatticeBasis& basis, const RationalVector& t) {
  const LllResult reduced = lll_with_transform(basis);
  const LatticeVector y = nearest_plane(reduced.basis, t);
  IntVector x(basis.n(), 0);
  for (std::size_t j = 0; j < y.coeffs.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y.coeffs[j] * reduced.transform[j][i];
  return {y.coords, std::move(x)};
}

BddOutcome extract_with_fallback(const EmbeddedBasis& embedded, const SvpOracleResult& answer,
                                 const LatticeVector& fallback) {
  const std::size_t n = embedded.source_basis.n();
  const IntVector& w = answer.vector.coeffs;
  if (w.size() != n + 1) throw std::invalid_argument("oracle answer is not from the embedded basis");
  const Integer& c = w[n];
  if (c != 1 && c != -1) return {fallback, false};
  // w = (u + c t, c alpha) with u = B x; t-dagger = -c u.
  IntVector x(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
  if (c == 1)
    for (auto& xi : x) xi = -xi;
  return {LatticeVector::from_coeffs(embedded.source_basis, std::move(x)), true};
}

// Index of the last alpha tried: ceil(n / (2 log2(3/2))) + 1.
std::size_t alpha_trials(std::size_t n) {
  const double q = static_cast<double>(n) / (2.0 * std::log2(1.5));
  return static_cast<std::size_t>(std::ceil(q)) + 1;
}

}  // namespace

BddOutcome extract_bdd_solution(const EmbeddedBasis& embedded, const SvpOracleResult& answer) {
  return extract_with_fallback(embedded, answer,
                               reduced_nearest_plane(embedded.source_basis,
                                                     embedded.source_target));
}

std::vector<Rational> alpha_grid(const Rational& estimate_sq, std::size_t n) {
  if (estimate_sq <= 0) throw std::invalid_argument("distance estimate must be positive");
  constexpr unsigned kFractionBits = 20;
  Integer scale = 1;
  scale <<= kFractionBits;
  const Integer root = isqrt(floor(estimate_sq * Rational(scale * scale))) + 1;
  Rational alpha = make_rational(root, scale);

  std::vector<Rational> grid;
  const std::size_t last = alpha_trials(n);
  for (std::size_t j = 0; j <= last; ++j) {
    grid.push_back(alpha);
    alpha *= Rational(2, 3);
  }
  return grid;
}

namespace detail {

BddOutcome solve_bdd_unchecked(const LatticeBasis& basis, const RationalVector& t,
                               const OracleSpec& spec) {
  if (t.dim() != basis.m()) throw std::invalid_argument("target dimension differs from basis");
  const LatticeVector fallback = reduced_nearest_plane(basis, t);
  const Rational estimate_sq = norm_sq(fallback.coords - t);
  if (estimate_sq == 0) return {fallback, true};

  std::optional<BddOutcome> best;
  Rational best_dist;
  for (const Rational& alpha : alpha_grid(estimate_sq, basis.n())) {
    const EmbeddedBasis e = embed(basis, t, alpha);
    BddOutcome out = extract_with_fallback(e, oracle_query(spec, e.base), fallback);
    const Rational d = norm_sq(out.candidate.coords - t);
    if (!best || d < best_dist) {
      best_dist = d;
      best = std::move(out);
    }
  }
  if (estimate_sq < best_dist) return {fallback, false};
  return *best;
}

}  // namespace detail

BddOutcome solve_bdd(const LatticeBasis& basis, const RationalVector& t, const OracleSpec& spec) {
  if (!gamma_below_exponential(spec.gamma_sq, basis.n()))
    throw std::invalid_argument("oracle quality must satisfy gamma < 2^n");
  return detail::solve_bdd_unchecked(basis, t, spec);
}

}  // namespace latred
