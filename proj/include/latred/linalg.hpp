#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latred/rational.hpp"

namespace latred {

using IntVector = std::vector<Integer>;

class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : entries_(dim) {}
  explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  RationalVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static RationalVector from_integers(std::span<const Integer> values);

  std::size_t dim() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool is_zero() const;

  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  std::span<const Rational> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  RationalVector& operator+=(const RationalVector& other);
  RationalVector& operator-=(const RationalVector& other);
  RationalVector& operator*=(const Rational& scale);

  // Adds scale * other in place.
  void add_scaled(const Rational& scale, const RationalVector& other);

  friend bool operator==(const RationalVector&, const RationalVector&) = default;

 private:
  std::vector<Rational> entries_;
};

RationalVector operator+(RationalVector a, const RationalVector& b);
RationalVector operator-(RationalVector a, const RationalVector& b);
RationalVector operator-(RationalVector a);
RationalVector operator*(const Rational& scale, RationalVector v);

std::string to_string(const RationalVector& v);

// Column-major rational matrix: columns are the primary objects (basis vectors).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::vector<RationalVector> columns);

  static RationalMatrix identity(std::size_t dim);

  std::size_t rows() const { return columns_.empty() ? 0 : columns_.front().dim(); }
  std::size_t cols() const { return columns_.size(); }

  const RationalVector& column(std::size_t j) const { return columns_[j]; }
  RationalVector& column(std::size_t j) { return columns_[j]; }
  std::span<const RationalVector> columns() const { return columns_; }

  const Rational& at(std::size_t row, std::size_t col) const { return columns_[col][row]; }

  // Sum of coeffs[j] * column(j).
  RationalVector apply(std::span<const Integer> coeffs) const;
  RationalVector apply(const RationalVector& coeffs) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::vector<RationalVector> columns_;
};

Rational inner_product(const RationalVector& u, const RationalVector& v);
Rational norm_sq(const RationalVector& v);

// v|_u = <v,u>/<u,u> u
RationalVector project_onto(const RationalVector& v, const RationalVector& u);

// v - v|_u, exactly orthogonal to u.
RationalVector perp_component(const RationalVector& v, const RationalVector& u);

// Gram-Schmidt data of a column basis: bstar[i] = b_i - sum_{j<i} mu[i][j] bstar[j].
struct GramSchmidt {
  std::vector<RationalVector> bstar;
  std::vector<std::vector<Rational>> mu;  // mu[i][j] for j < i
  std::vector<Rational> bstar_norm_sq;
};

// Throws std::invalid_argument when the columns are linearly dependent.
GramSchmidt gram_schmidt_data(const RationalMatrix& basis);
RationalMatrix gram_schmidt(const RationalMatrix& basis);

// Exact x with A x = y, or nullopt when y is outside span(A). Throws
// std::invalid_argument when the columns of A are dependent.
std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& y);

// Least common multiple of all denominators.
Integer common_denominator(const RationalVector& v);
Integer common_denominator(const RationalMatrix& m);

// Largest bit length over all numerators and denominators.
std::size_t max_entry_bits(const RationalVector& v);
std::size_t max_entry_bits(const RationalMatrix& m);

}  // namespace latred
