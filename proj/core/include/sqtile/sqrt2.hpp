#pragma once

#include <iosfwd>
#include <string>

#include "sqtile/rational.hpp"

namespace sqtile {

/// An element a + b*sqrt(2) of the quadratic field Q(sqrt 2). Since sqrt(2)
/// is irrational the pair (a, b) is unique, so equality is componentwise.
class Sqrt2Num {
 public:
  Sqrt2Num() = default;
  Sqrt2Num(Rational a, Rational b = Rational{}) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

  static Sqrt2Num sqrt2() { return {0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// a - b*sqrt(2); the nontrivial field automorphism.
  Sqrt2Num conj() const { return {a_, -b_}; }
  /// a^2 - 2 b^2, the product with the conjugate.
  Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }
  /// Exact sign of the real number a + b*sqrt(2).
  int sign() const;

  Sqrt2Num operator-() const { return {-a_, -b_}; }
  Sqrt2Num& operator+=(const Sqrt2Num& o);
  Sqrt2Num& operator-=(const Sqrt2Num& o);
  Sqrt2Num& operator*=(const Sqrt2Num& o);
  Sqrt2Num& operator/=(const Sqrt2Num& o);

  friend Sqrt2Num operator+(Sqrt2Num s, const Sqrt2Num& t) { return s += t; }
  friend Sqrt2Num operator-(Sqrt2Num s, const Sqrt2Num& t) { return s -= t; }
  friend Sqrt2Num operator*(Sqrt2Num s, const Sqrt2Num& t) { return s *= t; }
  friend Sqrt2Num operator/(Sqrt2Num s, const Sqrt2Num& t) { return s /= t; }
  friend bool operator==(const Sqrt2Num&, const Sqrt2Num&) = default;

  std::string str() const;

 private:
  Rational a_;
  Rational b_;
};

inline Sqrt2Num conj(const Sqrt2Num& s) { return s.conj(); }

std::ostream& operator<<(std::ostream& os, const Sqrt2Num& s);

}  // namespace sqtile
