#include "latred/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace latred {

LatticeBasis::LatticeBasis(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.cols() > matrix_.rows())
    throw std::invalid_argument("basis has more columns than ambient dimension");
  gram_schmidt_data(matrix_);
}

LatticeVector LatticeVector::from_coeffs(const LatticeBasis& basis, IntVector coeffs) {
  RationalVector coords = basis.matrix().apply(coeffs);
  return {std::move(coords), std::move(coeffs)};
}

std::optional<IntVector> is_member(const LatticeBasis& basis, const RationalVector& w) {
  if (w.dim() != basis.m()) throw std::invalid_argument("vector dimension differs from basis");
  auto x = solve_linear(basis.matrix(), w);
  if (!x) return std::nullopt;
  IntVector coeffs;
  coeffs.reserve(x->dim());
  for (const auto& xi : *x) {
    if (!is_integer(xi)) return std::nullopt;
    coeffs.emplace_back(xi.get_num());
  }
  return coeffs;
}

namespace {

using IntColumns = std::vector<IntVector>;

IntColumns to_integer_columns(const RationalMatrix& m, const Integer& scale) {
  IntColumns cols(m.cols(), IntVector(m.rows()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rational v = m.at(i, j) * scale;
      if (!is_integer(v)) throw std::invalid_argument("hnf requires an integral basis");
      cols[j][i] = v.get_num();
    }
  return cols;
}

// (a, b) <- (x a + y b, -(bk/g) a + (ak/g) b) for pivot entries ak, bk.
void combine_columns(IntVector& a, IntVector& b, std::size_t row) {
  const Integer ak = a[row];
  const Integer bk = b[row];
  const ExtendedGcd e = extended_gcd(ak, bk);
  const Integer p = ak / e.g;
  const Integer q = bk / e.g;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Integer na = e.x * a[i] + e.y * b[i];
    const Integer nb = p * b[i] - q * a[i];
    a[i] = na;
    b[i] = nb;
  }
}

RationalMatrix hnf_columns(IntColumns cols) {
  const std::size_t n = cols.size();
  const std::size_t m = cols.front().size();
  std::size_t k = 0;
  for (std::size_t row = 0; row < m && k < n; ++row) {
    for (std::size_t j = k + 1; j < n; ++j)
      if (cols[j][row] != 0) combine_columns(cols[k], cols[j], row);
    if (cols[k][row] == 0) continue;
    if (cols[k][row] < 0)
      for (auto& x : cols[k]) x = -x;
    const Integer& pivot = cols[k][row];
    for (std::size_t j = 0; j < k; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), cols[j][row].get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t i = 0; i < m; ++i) cols[j][i] -= q * cols[k][i];
    }
    ++k;
  }
  if (k != n) throw std::invalid_argument("hnf input is rank deficient");
  std::vector<RationalVector> out;
  out.reserve(n);
  for (const auto& c : cols) out.push_back(RationalVector::from_integers(c));
  return RationalMatrix(std::move(out));
}

}  // namespace

RationalMatrix hnf(const LatticeBasis& basis) {
  return hnf_columns(to_integer_columns(basis.matrix(), Integer(1)));
}

bool lattices_equal(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.m() != b.m()) throw std::invalid_argument("lattices live in different ambient spaces");
  if (a.n() != b.n()) return false;
  const Integer scale = lcm(common_denominator(a.matrix()), common_denominator(b.matrix()));
  return hnf_columns(to_integer_columns(a.matrix(), scale)) ==
         hnf_columns(to_integer_columns(b.matrix(), scale));
}

Integer coefficient_gcd(std::span<const Integer> coeffs) {
  Integer g = 0;
  for (const auto& c : coeffs) g = gcd(g, c);
  return g;
}

bool is_elementary(const LatticeVector& w) { return coefficient_gcd(w.coeffs) == 1; }

LatticeVector make_elementary(const LatticeBasis& basis, const LatticeVector& w) {
  const Integer g = coefficient_gcd(w.coeffs);
  if (g == 0) throw std::invalid_argument("the zero vector has no elementary multiple");
  IntVector coeffs = w.coeffs;
  for (auto& c : coeffs) c /= g;
  return LatticeVector::from_coeffs(basis, std::move(coeffs));
}

// Reduces `first` to +-e_1 with a chain of 2x2 unimodular row operations T and
// accumulates T^{-1}; its first column is then +-first.
std::vector<IntVector> unimodular_completion(std::span<const Integer> first) {
  const std::size_t n = first.size();
  if (coefficient_gcd(first) != 1) throw std::invalid_argument("vector is not primitive");
  IntVector a(first.begin(), first.end());
  // inv[j] is column j of T^{-1}.
  std::vector<IntVector> inv(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

  for (std::size_t j = 1; j < n; ++j) {
    if (a[j] == 0) continue;
    const ExtendedGcd e = extended_gcd(a[0], a[j]);
    const Integer p = a[0] / e.g;
    const Integer q = a[j] / e.g;
    // Row op M = [[x, y], [-q, p]] (det 1) sends (a0, aj) to (g, 0).
    // T^{-1} <- T^{-1} M^{-1} with M^{-1} = [[p, -y], [q, x]].
    for (std::size_t r = 0; r < n; ++r) {
      const Integer c0 = inv[0][r];
      const Integer cj = inv[j][r];
      inv[0][r] = c0 * p + cj * q;
      inv[j][r] = -c0 * e.y + cj * e.x;
    }
    a[0] = e.g;
    a[j] = 0;
  }
  if (a[0] == -1)
    for (auto& x : inv[0]) x = -x;
  return inv;
}

std::vector<LatticeVector> complete_basis(const LatticeVector& v, const LatticeBasis& basis) {
  if (basis.n() < 2) throw std::invalid_argument("basis completion needs n >= 2");
  if (v.coeffs.size() != basis.n() || basis.matrix().apply(v.coeffs) != v.coords)
    throw std::invalid_argument("vector is not in the lattice");
  if (!is_elementary(v)) throw std::invalid_argument("vector is not elementary");
  auto cols = unimodular_completion(v.coeffs);
  std::vector<LatticeVector> rest;
  rest.reserve(basis.n() - 1);
  for (std::size_t j = 1; j < cols.size(); ++j)
    rest.push_back(LatticeVector::from_coeffs(basis, std::move(cols[j])));
  return rest;
}

LatticeBasis project_basis_perp(std::span<const LatticeVector> rest, const RationalVector& v) {
  if (v.is_zero()) throw std::invalid_argument("projection direction is zero");
  if (rest.empty()) throw std::invalid_argument("nothing to project");
  std::vector<RationalVector> cols;
  cols.reserve(rest.size());
  for (const auto& b : rest) cols.push_back(perp_component(b.coords, v));
  return LatticeBasis(std::move(cols));
}

LatticeVector lift_candidate(const LatticeBasis& basis, const LatticeVector& v,
                             std::span<const LatticeVector> rest, const RationalVector& z_proj,
                             const RationalVector& t) {
  const LatticeBasis projected = project_basis_perp(rest, v.coords);
  const auto a = is_member(projected, z_proj);
  if (!a) throw std::invalid_argument("projected candidate is not in the projected lattice");

  RationalVector coords(basis.m());
  IntVector coeffs(basis.n(), 0);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const Integer& ai = (*a)[i];
    if (ai == 0) continue;
    coords.add_scaled(Rational(ai), rest[i].coords);
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += ai * rest[i].coeffs[k];
  }
  const Integer a1 =
      round_half_down(inner_product(t - coords, v.coords) / norm_sq(v.coords));
  coords.add_scaled(Rational(a1), v.coords);
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += a1 * v.coeffs[k];
  return {std::move(coords), std::move(coeffs)};
}

}  // namespace latred
