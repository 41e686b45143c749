#pragma once

#include <iosfwd>

#include "sqtile/rational.hpp"

namespace sqtile {

/// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  explicit Interval(Rational point) : lo(point), hi(std::move(point)) {}
  Interval(Rational l, Rational h);

  bool is_point() const { return lo == hi; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool contains_zero() const { return contains(Rational{}); }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }

  Interval& operator+=(const Interval& o);
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Rational& k, const Interval& a);

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& i);

}  // namespace sqtile
