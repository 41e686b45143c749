#include "sqtile/construct.hpp"

#include <stdexcept>

#include "sqtile/basis.hpp"

namespace sqtile {

Rational ContinuedFraction::value() const {
  if (quotients.empty()) throw std::logic_error("empty continued fraction");
  Rational v(quotients.back(), 1);
  for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it) {
    v = Rational(*it, 1) + v.inverse();
  }
  return v;
}

BigInt ContinuedFraction::quotient_sum() const {
  BigInt s = 0;
  for (const auto& q : quotients) s += q;
  return s;
}

ContinuedFraction continued_fraction(const Rational& r) {
  if (r.sign() <= 0) throw std::invalid_argument("continued fraction needs r > 0");
  ContinuedFraction cf;
  BigInt n = r.numerator();
  BigInt d = r.denominator();
  while (d != 0) {
    BigInt q = n / d;
    BigInt rem = n - q * d;
    cf.quotients.push_back(std::move(q));
    n = std::move(d);
    d = std::move(rem);
  }
  return cf;
}

Tiling euclid_tiling(const LinExpr& w, const LinExpr& h, const GeneratorTable& table) {
  if (lin_cmp(w, LinExpr{}, table) != std::strong_ordering::greater ||
      lin_cmp(h, LinExpr{}, table) != std::strong_ordering::greater) {
    throw std::invalid_argument("rectangle sides must be positive");
  }
  const auto ratio = commensurability_ratio(w, h);
  if (!ratio) throw std::invalid_argument("side ratio is not rational");

  Tiling t{table, w, h, {}};
  // Work in units of w: the residual rectangle is [x, x + rw] x [y, y + rh].
  Rational x, y, rw(1), rh(*ratio);
  while (true) {
    const Rational side = rw < rh ? rw : rh;
    t.tiles.push_back({x * w, y * w, side * w, side * w});
    if (rw == rh) break;
    if (rw > rh) {
      x += side;
      rw -= side;
    } else {
      y += side;
      rh -= side;
    }
  }
  return t;
}

Tiling euclid_tiling(const Rational& w, const Rational& h) {
  if (w.sign() <= 0 || h.sign() <= 0) {
    throw std::invalid_argument("rectangle sides must be positive");
  }
  return euclid_tiling(LinExpr(w), LinExpr(h), GeneratorTable{});
}

}  // namespace sqtile
