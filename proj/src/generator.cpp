#include <random>
#include <stdexcept>

#include "latred/instance.hpp"
#include "latred/reference.hpp"
#include "latred/svp_oracle.hpp"

namespace latred {

std::string to_string(GeneratorSpec::Kind kind) {
  switch (kind) {
    case GeneratorSpec::Kind::uniform:
      return "uniform";
    case GeneratorSpec::Kind::planted_bdd:
      return "planted-bdd";
    case GeneratorSpec::Kind::planted_cvp:
      return "planted-cvp";
  }
  return "uniform";
}

GeneratorSpec::Kind parse_generator_kind(std::string_view text) {
  if (text == "uniform") return GeneratorSpec::Kind::uniform;
  if (text == "planted-bdd") return GeneratorSpec::Kind::planted_bdd;
  if (text == "planted-cvp") return GeneratorSpec::Kind::planted_cvp;
  throw std::invalid_argument("unknown generator kind '" + std::string(text) + "'");
}

namespace {

// Exact uniform draw from [lo, hi] by rejection on raw 64-bit output, so the
// stream is identical on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
    while (true) {
      const std::uint64_t r = rng_();
      if (span == 0) return static_cast<std::int64_t>(r);
      if (r < limit) return lo + static_cast<std::int64_t>(r % span);
    }
  }

 private:
  std::mt19937_64 rng_;
};

void validate(const GeneratorSpec& spec) {
  if (spec.n < 1 || spec.n > spec.m) throw std::invalid_argument("generator needs 1 <= n <= m");
  if (spec.entry_bits < 1 || spec.entry_bits > 40)
    throw std::invalid_argument("entry_bits must lie in [1, 40]");
  if (spec.gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  if (spec.bdd_slack <= 0 || spec.bdd_slack >= 1)
    throw std::invalid_argument("bdd slack must lie in (0, 1)");
}

LatticeBasis random_basis(Sampler& rng, const GeneratorSpec& spec) {
  const std::int64_t bound = std::int64_t{1} << spec.entry_bits;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<RationalVector> cols;
    for (std::size_t j = 0; j < spec.n; ++j) {
      RationalVector c(spec.m);
      for (std::size_t i = 0; i < spec.m; ++i) c[i] = Rational(rng.uniform(-bound, bound));
      cols.push_back(std::move(c));
    }
    try {
      return LatticeBasis(std::move(cols));
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  throw std::invalid_argument("could not draw an independent basis");
}

IntVector random_coeffs(Sampler& rng, std::size_t n, std::int64_t k) {
  IntVector x(n);
  for (auto& c : x) c = Integer(static_cast<long>(rng.uniform(-k, k)));
  return x;
}

InstanceFile planted_bdd(Sampler& rng, const GeneratorSpec& spec, LatticeBasis basis) {
  const LatticeVector p = LatticeVector::from_coeffs(basis, random_coeffs(rng, spec.n, 3));
  const Rational lambda1_sq = norm_sq(enumerate_shortest(basis).coords);
  // ||e|| = slack lambda_1 / (2 gamma), rounded down to 24 fractional bits so
  // the planted distance is itself rational.
  const Rational radius_sq =
      spec.bdd_slack * spec.bdd_slack * lambda1_sq / (Rational(4) * spec.gamma * spec.gamma);
  Integer unit = 1;
  unit <<= 24;
  const Rational scale = make_rational(isqrt(floor(radius_sq * Rational(unit * unit))), unit);
  if (scale == 0) throw std::invalid_argument("planted offset underflows");

  // Rational unit direction: inverse stereographic image of y / s.
  IntVector y(spec.m - 1);
  for (auto& c : y) c = Integer(static_cast<long>(rng.uniform(-64, 64)));
  const Integer s(static_cast<long>(rng.uniform(1, 64)));
  Integer y_sq = 0;
  for (const auto& c : y) y_sq += c * c;
  RationalVector dir(spec.m);
  for (std::size_t i = 0; i + 1 < spec.m; ++i) dir[i] = make_rational(2 * y[i] * s, y_sq + s * s);
  dir[spec.m - 1] = make_rational(y_sq - s * s, y_sq + s * s);
  const RationalVector t = p.coords + scale * dir;

  if (brute_cvp(basis, t).coords != p.coords)
    throw std::invalid_argument("planted point is not the unique closest vector");
  InstanceFile inst{std::move(basis)};
  inst.target = t;
  inst.gamma = spec.gamma;
  inst.planted = p.coords;
  inst.slack = spec.bdd_slack;
  return inst;
}

}  // namespace

InstanceFile plant_cvp(const LatticeBasis& basis, const RationalVector& p,
                       const RationalVector& offset) {
  if (!is_member(basis, p)) throw std::invalid_argument("planted point is not a lattice member");
  InstanceFile inst{basis};
  inst.target = p + offset;
  inst.planted = brute_cvp(basis, *inst.target).coords;
  inst.generator = "planted-cvp";
  return inst;
}

InstanceFile generate(const GeneratorSpec& spec) {
  validate(spec);
  Sampler rng(spec.seed);
  LatticeBasis basis = random_basis(rng, spec);
  const std::int64_t bound = std::int64_t{1} << spec.entry_bits;

  InstanceFile inst{basis};
  switch (spec.kind) {
    case GeneratorSpec::Kind::uniform: {
      RationalVector t(spec.m);
      for (std::size_t i = 0; i < spec.m; ++i)
        t[i] = make_rational(Integer(static_cast<long>(rng.uniform(-4 * bound, 4 * bound))), 4);
      inst.target = std::move(t);
      break;
    }
    case GeneratorSpec::Kind::planted_bdd:
      inst = planted_bdd(rng, spec, std::move(basis));
      break;
    case GeneratorSpec::Kind::planted_cvp: {
      const LatticeVector p = LatticeVector::from_coeffs(basis, random_coeffs(rng, spec.n, 3));
      RationalVector offset(spec.m);
      for (std::size_t i = 0; i < spec.m; ++i)
        offset[i] = make_rational(Integer(static_cast<long>(rng.uniform(-8 * bound, 8 * bound))), 8);
      inst = plant_cvp(basis, p.coords, offset);
      break;
    }
  }
  inst.gamma = spec.gamma;
  inst.seed = spec.seed;
  inst.generator = to_string(spec.kind);
  return inst;
}

}  // namespace latred
