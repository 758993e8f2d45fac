#include "enumeration.hpp"

#include <stdexcept>

namespace latred::detail {

namespace {

class Enumerator {
 public:
  Enumerator(const EnumerationRequest& req, const EnumerationVisitor& visit)
      : req_(req), visit_(visit), n_(req.gs->bstar.size()), radius_(req.radius_sq), x_(n_, 0) {}

  void run() {
    if (n_ == 0) return;
    descend(n_ - 1, Rational(0), true);
  }

 private:
  Rational center(std::size_t i) const {
    Rational c = req_.tau.empty() ? Rational(0) : req_.tau[i];
    for (std::size_t j = i + 1; j < n_; ++j)
      if (x_[j] != 0) c -= req_.gs->mu[j][i] * Rational(x_[j]);
    return c;
  }

  // Returns false when this value of x_i is outside the current radius.
  bool try_value(std::size_t i, const Integer& value, const Rational& c, const Rational& above,
                 bool zero_above) {
    const Rational diff = Rational(value) - c;
    const Rational partial = above + diff * diff * req_.gs->bstar_norm_sq[i];
    if (partial + req_.offset_sq > radius_) return false;
    x_[i] = value;
    if (i == 0) {
      if (auto tighter = visit_(x_, partial + req_.offset_sq)) radius_ = *tighter;
    } else {
      descend(i - 1, partial, zero_above && value == 0);
    }
    return true;
  }

  void descend(std::size_t i, const Rational& above, bool zero_above) {
    const Rational c = center(i);
    const Integer nearest = round_half_down(c);
    std::optional<Integer> lower;
    if (req_.half_space && zero_above) lower = Integer(i == 0 ? 1 : 0);

    Integer up = nearest;
    Integer down = nearest - 1;
    bool up_alive = true;
    bool down_alive = true;
    if (lower && up < *lower) {
      up = *lower;
      down_alive = false;
    }
    if (lower && down < *lower) down_alive = false;

    while (up_alive || down_alive) {
      bool take_up = up_alive;
      if (up_alive && down_alive) take_up = (Rational(up) - c) <= (c - Rational(down));
      if (take_up) {
        up_alive = try_value(i, up, c, above, zero_above);
        ++up;
      } else {
        down_alive = try_value(i, down, c, above, zero_above);
        --down;
        if (lower && down < *lower) down_alive = false;
      }
    }
    x_[i] = 0;
  }

  const EnumerationRequest& req_;
  const EnumerationVisitor& visit_;
  std::size_t n_;
  Rational radius_;
  IntVector x_;
};

}  // namespace

void enumerate(const EnumerationRequest& request, const EnumerationVisitor& visit) {
  if (request.gs == nullptr) throw std::invalid_argument("enumeration needs Gram-Schmidt data");
  if (!request.tau.empty() && request.tau.size() != request.gs->bstar.size())
    throw std::invalid_argument("target coordinates do not match the basis");
  Enumerator(request, visit).run();
}

}  // namespace latred::detail
