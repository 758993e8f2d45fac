#include "latred/rational.hpp"

#include <stdexcept>

namespace latred {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view text, bool allow_sign) {
  std::string_view digits = text;
  if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+'))
    digits.remove_prefix(1);
  if (!is_digits(digits))
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  const Integer num = parse_integer(text.substr(0, slash), true);
  const Integer den = parse_integer(text.substr(slash + 1), false);
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer round_half_down(const Rational& value) {
  return ceil(value - Rational(1, 2));
}

std::size_t bit_length(const Integer& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

std::size_t bit_length(const Rational& value) {
  const std::size_t num = bit_length(Integer(value.get_num()));
  const std::size_t den = bit_length(Integer(value.get_den()));
  return num > den ? num : den;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer isqrt(const Integer& value) {
  if (value < 0) throw std::domain_error("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), value.get_mpz_t());
  return r;
}

}  // namespace latred
