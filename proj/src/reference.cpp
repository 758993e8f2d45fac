#include "latred/reference.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace latred {

namespace {

void check_budget(const LatticeBasis& basis, const EnumerationBudget& budget) {
  if (budget.max_dim < 1) throw std::invalid_argument("enumeration budget needs max_dim >= 1");
  if (basis.n() > budget.max_dim)
    throw std::invalid_argument("dimension " + std::to_string(basis.n()) +
                                " exceeds the reference budget " +
                                std::to_string(budget.max_dim));
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Visits every x with ||B x - t||^2 <= radius (radius may shrink through the
// visitor). Levels run from the last basis vector down, values in ascending
// order between exact bounds.
class BallWalker {
 public:
  using Visitor = std::function<void(const IntVector&, const Rational&, Rational& radius)>;

  BallWalker(const LatticeBasis& basis, const RationalVector& t, Rational radius)
      : gs_(gram_schmidt_data(basis.matrix())), n_(basis.n()), radius_(std::move(radius)),
        x_(n_, 0) {
    tau_.resize(n_);
    RationalVector residual = t;
    for (std::size_t i = 0; i < n_; ++i) {
      tau_[i] = inner_product(t, gs_.bstar[i]) / gs_.bstar_norm_sq[i];
      residual.add_scaled(-tau_[i], gs_.bstar[i]);
    }
    offset_ = norm_sq(residual);
  }

  void walk(const Visitor& visit) {
    visit_ = &visit;
    level(n_ - 1, Rational(0));
  }

 private:
  void level(std::size_t i, const Rational& above) {
    Rational c = tau_[i];
    for (std::size_t j = i + 1; j < n_; ++j) c -= gs_.mu[j][i] * Rational(x_[j]);
    const Rational slack = radius_ - offset_ - above;
    if (slack < 0) return;
    const Rational span_sq = slack / gs_.bstar_norm_sq[i];
    const Integer r = isqrt(floor(span_sq));
    const Integer lo = floor(c) - r - 1;
    const Integer hi = ceil(c) + r + 1;
    for (Integer v = lo; v <= hi; ++v) {
      const Rational d = Rational(v) - c;
      const Rational partial = above + d * d * gs_.bstar_norm_sq[i];
      if (partial + offset_ > radius_) continue;
      x_[i] = v;
      if (i == 0)
        (*visit_)(x_, partial + offset_, radius_);
      else
        level(i - 1, partial);
    }
    x_[i] = 0;
  }

  GramSchmidt gs_;
  std::size_t n_;
  Rational radius_;
  std::vector<Rational> tau_;
  Rational offset_;
  IntVector x_;
  const Visitor* visit_ = nullptr;
};

// Any lattice point near t: nearest-plane decoding on the basis as given.
IntVector rough_decode(const LatticeBasis& basis, const RationalVector& t) {
  const GramSchmidt gs = gram_schmidt_data(basis.matrix());
  RationalVector residual = t;
  IntVector x(basis.n(), 0);
  for (std::size_t i = basis.n(); i-- > 0;) {
    const Rational c = inner_product(residual, gs.bstar[i]) / gs.bstar_norm_sq[i];
    x[i] = floor(c + Rational(1, 2));
    residual.add_scaled(-Rational(x[i]), basis.column(i));
  }
  return x;
}

void box_walk(std::size_t n, long k, const std::function<void(const IntVector&)>& visit) {
  IntVector x(n, Integer(-k));
  while (true) {
    visit(x);
    std::size_t i = 0;
    while (i < n && x[i] == k) x[i++] = -k;
    if (i == n) return;
    ++x[i];
  }
}

}  // namespace

LatticeVector brute_cvp(const LatticeBasis& basis, const RationalVector& t,
                        const EnumerationBudget& budget) {
  check_budget(basis, budget);
  if (t.dim() != basis.m()) throw std::invalid_argument("target dimension differs from basis");

  IntVector best_x;
  Rational best;
  auto offer = [&](const IntVector& x, const Rational& d) {
    if (best_x.empty() || d < best || (d == best && lex_less(x, best_x))) {
      best = d;
      best_x = x;
    }
  };

  if (budget.strategy == EnumerationBudget::Strategy::fixed_box) {
    box_walk(basis.n(), budget.box, [&](const IntVector& x) {
      offer(x, norm_sq(basis.matrix().apply(x) - t));
    });
  } else {
    const IntVector start = rough_decode(basis, t);
    const Rational radius = norm_sq(basis.matrix().apply(start) - t);
    BallWalker walker(basis, t, radius);
    walker.walk([&](const IntVector& x, const Rational& d, Rational& r) {
      offer(x, d);
      r = best;
    });
  }
  return LatticeVector::from_coeffs(basis, std::move(best_x));
}

Rational brute_distance_sq(const LatticeBasis& basis, const RationalVector& t,
                           const EnumerationBudget& budget) {
  return norm_sq(brute_cvp(basis, t, budget).coords - t);
}

std::vector<Rational> successive_minima(const LatticeBasis& basis,
                                        const EnumerationBudget& budget) {
  check_budget(basis, budget);
  const std::size_t n = basis.n();
  const RationalVector origin(basis.m());

  Rational radius = norm_sq(basis.column(0));
  for (std::size_t j = 1; j < n; ++j) radius = std::min(radius, norm_sq(basis.column(j)));

  while (true) {
    std::vector<std::pair<Rational, IntVector>> found;
    auto collect = [&](const IntVector& x) {
      if (std::all_of(x.begin(), x.end(), [](const Integer& c) { return c == 0; })) return;
      const Rational len = norm_sq(basis.matrix().apply(x));
      if (budget.strategy == EnumerationBudget::Strategy::fixed_box || len <= radius)
        found.emplace_back(len, x);
    };
    if (budget.strategy == EnumerationBudget::Strategy::fixed_box) {
      box_walk(n, budget.box, collect);
    } else {
      BallWalker walker(basis, origin, radius);
      walker.walk([&](const IntVector& x, const Rational&, Rational&) { collect(x); });
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      return a.first < b.first || (a.first == b.first && lex_less(a.second, b.second));
    });

    std::vector<RationalVector> independent;
    std::vector<Rational> minima;
    for (const auto& [len, x] : found) {
      RationalVector w = basis.matrix().apply(x);
      for (const auto& u : independent) w.add_scaled(-inner_product(w, u) / norm_sq(u), u);
      if (w.is_zero()) continue;
      independent.push_back(std::move(w));
      minima.push_back(len);
      if (minima.size() == n) return minima;
    }
    if (budget.strategy == EnumerationBudget::Strategy::fixed_box)
      throw std::runtime_error("coefficient box too small to reach all successive minima");
    radius *= 4;
  }
}

bool verify_usvp_promise(const LatticeBasis& basis, const Rational& gamma,
                         const EnumerationBudget& budget) {
  const auto minima = successive_minima(basis, budget);
  if (minima.size() < 2) return true;
  return minima[1] >= gamma * gamma * minima[0];
}

}  // namespace latred
