#include "latred/lll.hpp"

#include <stdexcept>
#include <utility>

namespace latred {

namespace {

class LllState {
 public:
  LllState(const LatticeBasis& basis, Rational delta)
      : delta_(std::move(delta)), n_(basis.n()) {
    auto gs = gram_schmidt_data(basis.matrix());
    mu_ = std::move(gs.mu);
    norms_ = std::move(gs.bstar_norm_sq);
    for (std::size_t j = 0; j < n_; ++j) {
      b_.push_back(basis.column(j));
      IntVector e(n_, 0);
      e[j] = 1;
      u_.push_back(std::move(e));
    }
  }

  void run() {
    std::size_t k = 1;
    while (k < n_) {
      size_reduce(k, k - 1);
      const Rational& m = mu_[k][k - 1];
      if (norms_[k] < (delta_ - m * m) * norms_[k - 1]) {
        swap(k);
        if (k > 1) --k;
      } else {
        for (std::size_t j = k - 1; j-- > 0;) size_reduce(k, j);
        ++k;
      }
    }
  }

  LllResult result() && { return {LatticeBasis(std::move(b_)), std::move(u_)}; }

 private:
  void size_reduce(std::size_t k, std::size_t j) {
    if (abs(mu_[k][j]) <= Rational(1, 2)) return;
    const Integer q = round_half_down(mu_[k][j]);
    const Rational qr(q);
    b_[k].add_scaled(-qr, b_[j]);
    for (std::size_t i = 0; i < n_; ++i) u_[k][i] -= q * u_[j][i];
    mu_[k][j] -= qr;
    for (std::size_t i = 0; i < j; ++i) mu_[k][i] -= qr * mu_[j][i];
  }

  void swap(std::size_t k) {
    const Rational m = mu_[k][k - 1];
    const Rational bn = norms_[k] + m * m * norms_[k - 1];
    mu_[k][k - 1] = m * norms_[k - 1] / bn;
    norms_[k] = norms_[k - 1] * norms_[k] / bn;
    norms_[k - 1] = bn;
    std::swap(b_[k], b_[k - 1]);
    std::swap(u_[k], u_[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu_[k][j], mu_[k - 1][j]);
    for (std::size_t i = k + 1; i < n_; ++i) {
      const Rational t = mu_[i][k];
      mu_[i][k] = mu_[i][k - 1] - m * t;
      mu_[i][k - 1] = t + mu_[k][k - 1] * mu_[i][k];
    }
  }

  Rational delta_;
  std::size_t n_;
  std::vector<RationalVector> b_;
  std::vector<IntVector> u_;
  std::vector<std::vector<Rational>> mu_;
  std::vector<Rational> norms_;
};

}  // namespace

LllResult lll_with_transform(const LatticeBasis& basis, const LllParams& params) {
  if (params.delta <= Rational(1, 4) || params.delta >= 1)
    throw std::invalid_argument("LLL delta must lie in (1/4, 1)");
  LllState state(basis, params.delta);
  state.run();
  return std::move(state).result();
}

LatticeBasis lll(const LatticeBasis& basis, const LllParams& params) {
  return lll_with_transform(basis, params).basis;
}

bool is_size_reduced(const LatticeBasis& basis) {
  const auto gs = gram_schmidt_data(basis.matrix());
  for (const auto& row : gs.mu)
    for (const auto& m : row)
      if (abs(m) > Rational(1, 2)) return false;
  return true;
}

bool satisfies_lovasz(const LatticeBasis& basis, const Rational& delta) {
  const auto gs = gram_schmidt_data(basis.matrix());
  for (std::size_t k = 1; k < basis.n(); ++k) {
    const Rational& m = gs.mu[k][k - 1];
    if (gs.bstar_norm_sq[k] < (delta - m * m) * gs.bstar_norm_sq[k - 1]) return false;
  }
  return true;
}

}  // namespace latred
