#include "sqtile/hamel.hpp"

#include <stdexcept>

#include "sqtile/errors.hpp"

namespace sqtile {

bool QuadPoly::nonnegative_everywhere() const {
  if (c2.sign() < 0) return false;
  if (c2.is_zero()) return c1.is_zero() && c0.sign() >= 0;
  return c1 * c1 - Rational(4) * c2 * c0 <= Rational{};
}

Sqrt2Num x_area(const Sqrt2Num& w, const Sqrt2Num& h, const Sqrt2Num& x) {
  return (Sqrt2Num(w.a()) + Sqrt2Num(w.b()) * x) * (Sqrt2Num(h.a()) + Sqrt2Num(h.b()) * x);
}

QuadPoly x_area_poly(const Sqrt2Num& w, const Sqrt2Num& h) {
  const Rational& a = w.a();
  const Rational& b = w.b();
  const Rational& c = h.a();
  const Rational& d = h.b();
  return {b * d, b * c + a * d, a * c};
}

bool x_area_nonneg_for_all_x(const Sqrt2Num& w, const Sqrt2Num& h) {
  if (w.sign() <= 0 || h.sign() <= 0) {
    throw std::invalid_argument("rectangle sides must be positive");
  }
  const bool nonneg = x_area_poly(w, h).nonnegative_everywhere();
  const bool commensurable = (h / w).is_rational();
  if (nonneg != commensurable) {
    throw std::logic_error("x-area sign test disagrees with side-ratio test for " +
                           w.str() + " x " + h.str());
  }
  return nonneg;
}

Rational y_area(const LinExpr& w, const LinExpr& h, const Basis& basis, const Rational& y) {
  const auto [a, b] = coords_st(w, basis);
  const auto [c, d] = coords_st(h, basis);
  return (a + b * y) * (c + d * y);
}

Rational y_area(const Placement& p, const Basis& basis, const Rational& y) {
  return y_area(p.w, p.h, basis, y);
}

AdditivityBalance y_area_balance(const Tiling& t, const Basis& basis, const Rational& y) {
  AdditivityBalance bal{y, y_area(t.outer_w, t.outer_h, basis, y), {}};
  for (const auto& p : t.tiles) bal.tile_sum += y_area(p, basis, y);
  return bal;
}

std::optional<AdditivityBalance> additivity_violation(const Tiling& t, const Basis& basis,
                                                      const std::vector<Rational>& ys) {
  const auto report = validate(t);
  if (!report.valid()) {
    const auto& f = report.failures.front();
    throw InvalidTiling(std::string("not a valid cutting: ") + to_string(f.kind));
  }
  for (const auto& y : ys) {
    auto bal = y_area_balance(t, basis, y);
    if (!bal.holds()) return bal;
  }
  return std::nullopt;
}

bool additivity_check(const Tiling& t, const Basis& basis, const std::vector<Rational>& ys) {
  return !additivity_violation(t, basis, ys).has_value();
}

const char* to_string(GoodContradiction c) {
  switch (c) {
    case GoodContradiction::none: return "none";
    case GoodContradiction::area_mismatch: return "area_mismatch";
    case GoodContradiction::conjugate_negative: return "conjugate_negative";
  }
  return "unknown";
}

GoodSquareAnalysis analyze_good_squares(const std::vector<Sqrt2Num>& sides,
                                        const Sqrt2Num& target_w, const Sqrt2Num& target_h) {
  if (sides.empty()) throw std::invalid_argument("no square sides given");
  GoodSquareAnalysis out;
  for (const auto& s : sides) {
    out.A += s.a() * s.a();
    out.B += s.b() * s.b();
    out.C += s.a() * s.b();
  }
  out.target_area = target_w * target_h;
  // sum (a + b r)^2 = sum (a^2 + 2 b^2) + 2 sum(ab) r
  out.squares_area = Sqrt2Num(out.A + Rational(2) * out.B, Rational(2) * out.C);
  out.area_identity_holds = out.squares_area == out.target_area;
  if (!out.area_identity_holds) {
    out.contradiction = GoodContradiction::area_mismatch;
  } else if (out.target_area.conj().sign() < 0) {
    // The conjugate of the squares' total is a sum of squares, hence >= 0.
    out.contradiction = GoodContradiction::conjugate_negative;
  }
  return out;
}

}  // namespace sqtile
