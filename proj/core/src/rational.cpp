#include "sqtile/rational.hpp"

#include <cctype>
#include <ostream>

#include "sqtile/errors.hpp"

namespace sqtile {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long v) : q_(BigInt(std::to_string(v))) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'",
                     std::string(text));
  }
  BigInt n(std::string(num), 10);
  const BigInt d(std::string(den), 10);
  if (negative) n = -n;
  return Rational(n, d);
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class inv = 1 / q_;
  return Rational(inv);
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // Round |q| * 10^digits half away from zero.
  const mpq_class scaled = ::abs(q_) * scale;
  BigInt n = scaled.get_num();
  const BigInt d = scaled.get_den();
  BigInt rounded = (2 * n + d) / (2 * d);
  std::string s = rounded.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  if (q_ < 0 && rounded != 0) s.insert(0, 1, '-');
  return s;
}

std::string Rational::str() const { return q_.get_str(); }

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace sqtile
