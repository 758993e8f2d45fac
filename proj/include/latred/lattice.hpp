#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "latred/linalg.hpp"

namespace latred {

// n linearly independent columns in Q^m, 1 <= n <= m.
class LatticeBasis {
 public:
  // Throws std::invalid_argument on dependent columns.
  explicit LatticeBasis(RationalMatrix matrix);
  explicit LatticeBasis(std::vector<RationalVector> columns)
      : LatticeBasis(RationalMatrix(std::move(columns))) {}

  static LatticeBasis identity(std::size_t dim) { return LatticeBasis(RationalMatrix::identity(dim)); }

  const RationalMatrix& matrix() const { return matrix_; }
  const RationalVector& column(std::size_t j) const { return matrix_.column(j); }
  std::size_t n() const { return matrix_.cols(); }
  std::size_t m() const { return matrix_.rows(); }

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  RationalMatrix matrix_;
};

// A lattice point in ambient coordinates together with its integer
// coefficients in the basis it was built from: coords == B * coeffs.
struct LatticeVector {
  RationalVector coords;
  IntVector coeffs;

  static LatticeVector from_coeffs(const LatticeBasis& basis, IntVector coeffs);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

// Integer x with B x = w, or nullopt if w is not a lattice point.
std::optional<IntVector> is_member(const LatticeBasis& basis, const RationalVector& w);

// Column-style Hermite normal form (lower echelon, positive pivots, entries
// left of a pivot reduced into [0, pivot)). Throws on non-integral input.
RationalMatrix hnf(const LatticeBasis& basis);

// Lattice equality via HNF of the denominator-cleared bases.
bool lattices_equal(const LatticeBasis& a, const LatticeBasis& b);

Integer coefficient_gcd(std::span<const Integer> coeffs);
bool is_elementary(const LatticeVector& w);

// Divides w by the gcd of its coefficients. Throws on the zero vector.
LatticeVector make_elementary(const LatticeBasis& basis, const LatticeVector& w);

// Unimodular n x n integer matrix (as columns) whose first column is the
// coprime vector `first`.
std::vector<IntVector> unimodular_completion(std::span<const Integer> first);

// Vectors b_2..b_n with Lambda(v, b_2, ..., b_n) = Lambda(B). Requires n >= 2
// and v elementary in Lambda(B); throws otherwise.
std::vector<LatticeVector> complete_basis(const LatticeVector& v, const LatticeBasis& basis);

// Components of `rest` orthogonal to v: a basis of the projected lattice.
LatticeBasis project_basis_perp(std::span<const LatticeVector> rest, const RationalVector& v);

// Lifts z_proj from the projected lattice back to Lambda(B): solves
// z_proj = sum a_i (b_i)_perp exactly, then picks the multiple of v that brings
// the lift closest to t (exact ties go to the smaller multiple).
LatticeVector lift_candidate(const LatticeBasis& basis, const LatticeVector& v,
                             std::span<const LatticeVector> rest, const RationalVector& z_proj,
                             const RationalVector& t);

}  // namespace latred
