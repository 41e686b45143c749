#include "sqtile/interval.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sqtile {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw std::invalid_argument("interval with lo > hi");
}

Interval& Interval::operator+=(const Interval& o) {
  lo += o.lo;
  hi += o.hi;
  return *this;
}

Interval operator-(const Interval& a, const Interval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

Interval operator*(const Rational& k, const Interval& a) {
  if (k.sign() >= 0) return {k * a.lo, k * a.hi};
  return {k * a.hi, k * a.lo};
}

std::ostream& operator<<(std::ostream& os, const Interval& i) {
  return os << '[' << i.lo << ", " << i.hi << ']';
}

}  // namespace sqtile
