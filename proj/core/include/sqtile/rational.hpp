#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sqtile {

using BigInt = mpz_class;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "[-]digits[/digits]". Throws ParseError on anything else,
  /// DivisionByZero on a zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigInt floor() const;
  Rational abs() const;
  Rational inverse() const;
  double to_double() const { return q_.get_d(); }

  /// Decimal rendering rounded half away from zero to `digits` places.
  std::string to_decimal(int digits) const;
  /// Canonical "n" or "n/d".
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sqtile
