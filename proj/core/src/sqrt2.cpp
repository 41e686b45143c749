#include "sqtile/sqrt2.hpp"

#include <ostream>

#include "sqtile/errors.hpp"

namespace sqtile {

int Sqrt2Num::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the term with the larger square wins.
  const Rational a2 = a_ * a_;
  const Rational b2 = Rational(2) * b_ * b_;
  if (a2 == b2) return 0;  // unreachable for rational a, b != 0
  return a2 > b2 ? sa : sb;
}

Sqrt2Num& Sqrt2Num::operator+=(const Sqrt2Num& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Sqrt2Num& Sqrt2Num::operator-=(const Sqrt2Num& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Sqrt2Num& Sqrt2Num::operator*=(const Sqrt2Num& o) {
  // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r
  Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Sqrt2Num& Sqrt2Num::operator/=(const Sqrt2Num& o) {
  if (o.is_zero()) throw DivisionByZero();
  const Rational n = o.norm();
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::string Sqrt2Num::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out;
  if (!a_.is_zero()) {
    out = a_.str();
    out += b_.sign() < 0 ? " - " : " + ";
    out += b_.abs().str();
  } else {
    out = b_.str();
  }
  return out + "*sqrt2";
}

std::ostream& operator<<(std::ostream& os, const Sqrt2Num& s) {
  return os << s.str();
}

}  // namespace sqtile
