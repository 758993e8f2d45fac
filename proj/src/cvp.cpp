#include "latred/cvp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "latred/lll.hpp"

namespace latred {

std::string to_string(Branch branch) {
  switch (branch) {
    case Branch::bdd:
      return "bdd";
    case Branch::recurse:
      return "recurse";
    case Branch::base:
      return "base";
  }
  return "base";
}

std::string ReductionTrace::serialize() const {
  std::ostringstream out;
  auto opt = [](const std::optional<Rational>& v) { return v ? to_string(*v) : std::string("-"); };
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const TraceLevel& l = levels[k];
    out << "level=" << k << " dim=" << l.dim << " branch=" << to_string(l.branch)
        << " vnorm2=" << to_string(l.oracle_vector_norm_sq) << " z1d2=" << opt(l.z1_dist_sq)
        << " z2d2=" << opt(l.z2_dist_sq) << " bits=" << l.max_entry_bits << "\n";
  }
  return out.str();
}

LatticeVector cvp_base_case(const RationalVector& b1, const RationalVector& t) {
  const Rational len = norm_sq(b1);
  if (len == 0) throw std::invalid_argument("base case needs a nonzero basis vector");
  const Integer a = round_half_down(inner_product(t, b1) / len);
  return {Rational(a) * b1, IntVector{a}};
}

std::size_t collect_bit_stats(const ReductionTrace& trace) {
  std::size_t bits = 0;
  for (const auto& l : trace.levels) bits = std::max(bits, l.max_entry_bits);
  return bits;
}

std::size_t input_size_parameter(const LatticeBasis& integral_basis) {
  Rational longest = 0;
  for (const auto& c : integral_basis.matrix().columns()) longest = std::max(longest, norm_sq(c));
  // ceil(log2 ||b||) = least k with 4^k >= ||b||^2.
  std::size_t k = 0;
  Integer power = 1;
  while (Rational(power) < longest) {
    power <<= 2;
    ++k;
  }
  return std::max(integral_basis.n(), k);
}

namespace {

std::size_t bits_of(std::span<const LatticeVector> vs) {
  std::size_t b = 0;
  for (const auto& v : vs) b = std::max(b, max_entry_bits(v.coords));
  return b;
}

class Reducer {
 public:
  explicit Reducer(const OracleSpec& spec) : spec_(spec) {}

  LatticeVector solve(const LatticeBasis& basis, const RationalVector& t) {
    const std::size_t index = trace_.levels.size();
    trace_.levels.push_back({});
    trace_.levels[index].dim = basis.n();
    std::size_t bits = std::max(max_entry_bits(basis.matrix()), max_entry_bits(t));

    if (basis.n() == 1) {
      LatticeVector z = cvp_base_case(basis.column(0), t);
      TraceLevel& rec = trace_.levels[index];
      rec.branch = Branch::base;
      rec.oracle_vector_norm_sq = norm_sq(basis.column(0));
      rec.z2_dist_sq = norm_sq(z.coords - t);
      rec.max_entry_bits = std::max(bits, max_entry_bits(z.coords));
      return z;
    }

    LatticeVector z1 = detail::solve_bdd_unchecked(basis, t, spec_).candidate;
    const LatticeVector v = oracle_query(spec_, basis).vector;

    std::vector<LatticeVector> rest = reduce_rest(complete_basis(v, basis));
    const LatticeBasis projected = project_basis_perp(rest, v.coords);
    const RationalVector t_perp = perp_component(t, v.coords);
    const LatticeVector z2_proj = solve(projected, t_perp);
    LatticeVector z2 = lift_candidate(basis, v, rest, z2_proj.coords, t);

    const Rational d1 = norm_sq(z1.coords - t);
    const Rational d2 = norm_sq(z2.coords - t);
    bits = std::max({bits, max_entry_bits(v.coords), bits_of(rest),
                     max_entry_bits(projected.matrix()), max_entry_bits(t_perp),
                     max_entry_bits(z1.coords), max_entry_bits(z2.coords)});

    TraceLevel& rec = trace_.levels[index];
    rec.oracle_vector_norm_sq = norm_sq(v.coords);
    rec.z1_dist_sq = d1;
    rec.z2_dist_sq = d2;
    rec.max_entry_bits = bits;
    if (d1 <= d2) {
      rec.branch = Branch::bdd;
      return z1;
    }
    rec.branch = Branch::recurse;
    return z2;
  }

  ReductionTrace take_trace() && { return std::move(trace_); }

 private:
  // LLL on the completion vectors; coefficients stay relative to the level's basis.
  static std::vector<LatticeVector> reduce_rest(std::vector<LatticeVector> rest) {
    std::vector<RationalVector> cols;
    cols.reserve(rest.size());
    for (const auto& r : rest) cols.push_back(r.coords);
    const LllResult reduced = lll_with_transform(LatticeBasis(std::move(cols)));
    const std::size_t n = rest.front().coeffs.size();
    std::vector<LatticeVector> out;
    out.reserve(rest.size());
    for (std::size_t j = 0; j < rest.size(); ++j) {
      IntVector coeffs(n, 0);
      for (std::size_t k = 0; k < rest.size(); ++k) {
        const Integer& u = reduced.transform[j][k];
        if (u == 0) continue;
        for (std::size_t i = 0; i < n; ++i) coeffs[i] += u * rest[k].coeffs[i];
      }
      out.push_back({reduced.basis.column(j), std::move(coeffs)});
    }
    return out;
  }

  const OracleSpec& spec_;
  ReductionTrace trace_;
};

}  // namespace

CvpResult cvp_solve(const CvpInstance& instance) {
  const LatticeBasis& basis = instance.basis;
  if (instance.target.dim() != basis.m())
    throw std::invalid_argument("target dimension differs from basis");
  if (instance.oracle.gamma_sq < 1) throw std::invalid_argument("oracle quality gamma must be >= 1");
  if (basis.n() >= 2 && !gamma_below_exponential(instance.oracle.gamma_sq, basis.n()))
    throw std::invalid_argument("oracle quality must satisfy gamma < 2^n");

  const Rational scale(common_denominator(basis.matrix()));
  std::vector<RationalVector> cols;
  for (const auto& c : basis.matrix().columns()) cols.push_back(scale * c);
  const LatticeBasis scaled(std::move(cols));
  const RationalVector scaled_target = scale * instance.target;

  Reducer reducer(instance.oracle);
  LatticeVector z = reducer.solve(scaled, scaled_target);

  CvpResult result;
  result.answer = LatticeVector::from_coeffs(basis, std::move(z.coeffs));
  result.dist_sq_achieved = norm_sq(result.answer.coords - instance.target);
  result.bound_factor_sq = instance.oracle.gamma_sq * instance.oracle.gamma_sq * Rational(basis.n());
  result.trace = std::move(reducer).take_trace();
  result.trace.input_size = input_size_parameter(scaled);
  return result;
}

}  // namespace latred
