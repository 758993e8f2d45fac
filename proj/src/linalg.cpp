#include "latred/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace latred {

namespace {

void require_same_dim(const RationalVector& a, const RationalVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}

}  // namespace

RationalVector RationalVector::from_integers(std::span<const Integer> values) {
  std::vector<Rational> entries;
  entries.reserve(values.size());
  for (const auto& x : values) entries.emplace_back(x);
  return RationalVector(std::move(entries));
}

bool RationalVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x == 0; });
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& scale) {
  for (auto& x : entries_) x *= scale;
  return *this;
}

void RationalVector::add_scaled(const Rational& scale, const RationalVector& other) {
  require_same_dim(*this, other);
  if (scale == 0) return;
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += scale * other.entries_[i];
}

RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
RationalVector operator-(RationalVector a) { return a *= Rational(-1); }
RationalVector operator*(const Rational& scale, RationalVector v) { return v *= scale; }

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

RationalMatrix::RationalMatrix(std::vector<RationalVector> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("matrix needs at least one column");
  const std::size_t m = columns_.front().dim();
  if (m == 0) throw std::invalid_argument("matrix columns must be non-empty");
  for (const auto& c : columns_)
    if (c.dim() != m) throw std::invalid_argument("matrix columns differ in dimension");
}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
  std::vector<RationalVector> cols(dim, RationalVector(dim));
  for (std::size_t i = 0; i < dim; ++i) cols[i][i] = 1;
  return RationalMatrix(std::move(cols));
}

RationalVector RationalMatrix::apply(std::span<const Integer> coeffs) const {
  if (coeffs.size() != cols())
    throw std::invalid_argument("coefficient count does not match column count");
  RationalVector out(rows());
  for (std::size_t j = 0; j < cols(); ++j) {
    if (coeffs[j] == 0) continue;
    out.add_scaled(Rational(coeffs[j]), columns_[j]);
  }
  return out;
}

RationalVector RationalMatrix::apply(const RationalVector& coeffs) const {
  if (coeffs.dim() != cols())
    throw std::invalid_argument("coefficient count does not match column count");
  RationalVector out(rows());
  for (std::size_t j = 0; j < cols(); ++j) out.add_scaled(coeffs[j], columns_[j]);
  return out;
}

Rational inner_product(const RationalVector& u, const RationalVector& v) {
  require_same_dim(u, v);
  Rational sum = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) sum += u[i] * v[i];
  return sum;
}

Rational norm_sq(const RationalVector& v) { return inner_product(v, v); }

RationalVector project_onto(const RationalVector& v, const RationalVector& u) {
  require_same_dim(v, u);
  const Rational uu = norm_sq(u);
  if (uu == 0) throw std::invalid_argument("projection onto the zero vector");
  return (inner_product(v, u) / uu) * u;
}

RationalVector perp_component(const RationalVector& v, const RationalVector& u) {
  return v - project_onto(v, u);
}

GramSchmidt gram_schmidt_data(const RationalMatrix& basis) {
  const std::size_t n = basis.cols();
  GramSchmidt gs;
  gs.bstar.reserve(n);
  gs.mu.assign(n, {});
  gs.bstar_norm_sq.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector b = basis.column(i);
    gs.mu[i].resize(i);
    for (std::size_t j = 0; j < i; ++j) {
      gs.mu[i][j] = inner_product(basis.column(i), gs.bstar[j]) / gs.bstar_norm_sq[j];
      b.add_scaled(-gs.mu[i][j], gs.bstar[j]);
    }
    Rational nb = norm_sq(b);
    if (nb == 0) throw std::invalid_argument("basis columns are linearly dependent");
    gs.bstar.push_back(std::move(b));
    gs.bstar_norm_sq.push_back(std::move(nb));
  }
  return gs;
}

RationalMatrix gram_schmidt(const RationalMatrix& basis) {
  return RationalMatrix(gram_schmidt_data(basis).bstar);
}

Integer common_denominator(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  return l;
}

Integer common_denominator(const RationalMatrix& m) {
  Integer l = 1;
  for (const auto& c : m.columns()) l = lcm(l, common_denominator(c));
  return l;
}

std::size_t max_entry_bits(const RationalVector& v) {
  std::size_t bits = 0;
  for (const auto& x : v) bits = std::max(bits, bit_length(x));
  return bits;
}

std::size_t max_entry_bits(const RationalMatrix& m) {
  std::size_t bits = 0;
  for (const auto& c : m.columns()) bits = std::max(bits, max_entry_bits(c));
  return bits;
}

// Fraction-free (Bareiss) elimination on the denominator-cleared augmented
// matrix [A | y], followed by exact back substitution.
std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& y) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (y.dim() != m) throw std::invalid_argument("right-hand side has wrong dimension");

  Integer scale = lcm(common_denominator(a), common_denominator(y));
  std::vector<std::vector<Integer>> rows(m, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = a.at(i, j) * scale;
      rows[i][j] = v.get_num();
    }
    Rational v = y[i] * scale;
    rows[i][n] = v.get_num();
  }

  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < m && rows[pivot][k] == 0) ++pivot;
    if (pivot == m) throw std::invalid_argument("matrix columns are linearly dependent");
    std::swap(rows[k], rows[pivot]);
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Integer num = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j];
        mpz_divexact(rows[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][k] = 0;
    }
    prev = rows[k][k];
  }

  for (std::size_t i = n; i < m; ++i)
    if (rows[i][n] != 0) return std::nullopt;

  RationalVector x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc(rows[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(rows[k][j]) * x[j];
    x[k] = acc / Rational(rows[k][k]);
  }
  return x;
}

}  // namespace latred
