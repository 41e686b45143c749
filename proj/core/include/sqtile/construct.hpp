#pragma once

#include <vector>

#include "sqtile/generator.hpp"
#include "sqtile/linexpr.hpp"
#include "sqtile/rational.hpp"
#include "sqtile/tiling.hpp"

namespace sqtile {

/// Canonical simple continued fraction [q0; q1, ..., qn] with every q >= 1
/// and qn >= 2 when n > 0.
struct ContinuedFraction {
  std::vector<BigInt> quotients;

  Rational value() const;
  BigInt quotient_sum() const;
  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Throws std::invalid_argument unless r > 0.
ContinuedFraction continued_fraction(const Rational& r);

/// Greedy square tiling of w x h: cut the largest square off the residual
/// rectangle, from the left when it is wide and from the bottom when it is
/// tall. Produces quotient_sum(max/min) squares. Throws std::invalid_argument
/// for a nonpositive side.
Tiling euclid_tiling(const Rational& w, const Rational& h);

/// Same for commensurable symbolic sides: h must equal q * w for a rational
/// q (std::invalid_argument otherwise); squares are rational multiples of w.
Tiling euclid_tiling(const LinExpr& w, const LinExpr& h, const GeneratorTable& table);

}  // namespace sqtile
