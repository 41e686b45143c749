#pragma once

#include <optional>
#include <vector>

#include "sqtile/basis.hpp"
#include "sqtile/rational.hpp"
#include "sqtile/sqrt2.hpp"
#include "sqtile/tiling.hpp"

namespace sqtile {

/// c2 x^2 + c1 x + c0 with rational coefficients.
struct QuadPoly {
  Rational c2;
  Rational c1;
  Rational c0;

  Rational operator()(const Rational& x) const { return (c2 * x + c1) * x + c0; }
  Sqrt2Num operator()(const Sqrt2Num& x) const { return (Sqrt2Num(c2) * x + c1) * x + c0; }
  /// True iff the polynomial is >= 0 at every real x.
  bool nonnegative_everywhere() const;

  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

/// x-area of the rectangle (a + b r) x (c + d r), r = sqrt 2: the value
/// (a + b x)(c + d x). x = sqrt 2 gives the ordinary area, x = -sqrt 2 its
/// conjugate.
Sqrt2Num x_area(const Sqrt2Num& w, const Sqrt2Num& h, const Sqrt2Num& x);

/// The x-area as a polynomial in x: (bd, bc + ad, ac).
QuadPoly x_area_poly(const Sqrt2Num& w, const Sqrt2Num& h);

/// Whether every x-area of w x h is nonnegative. This happens exactly when
/// h / w is rational; the function computes both and throws std::logic_error
/// if they ever disagree. Requires w, h > 0 (std::invalid_argument).
bool x_area_nonneg_for_all_x(const Sqrt2Num& w, const Sqrt2Num& h);

/// y-area (a + b y)(c + d y), where (a, b) and (c, d) are the s0/t0
/// coordinates of w and h in `basis`. Throws NotInSpan.
Rational y_area(const LinExpr& w, const LinExpr& h, const Basis& basis, const Rational& y);
Rational y_area(const Placement& p, const Basis& basis, const Rational& y);

struct AdditivityBalance {
  Rational y;
  Rational outer;     // y-area of the outer rectangle
  Rational tile_sum;  // sum of the tiles' y-areas
  bool holds() const { return outer == tile_sum; }
};

/// Outer y-area against the sum of tile y-areas at one y. No geometric check.
AdditivityBalance y_area_balance(const Tiling& t, const Basis& basis, const Rational& y);

/// First y in `ys` at which additivity fails, after checking that `t` is a
/// valid cutting (InvalidTiling otherwise).
std::optional<AdditivityBalance> additivity_violation(const Tiling& t, const Basis& basis,
                                                      const std::vector<Rational>& ys);

/// True iff the outer y-area equals the exact sum of tile y-areas for every
/// y in `ys`. Throws InvalidTiling for a geometrically invalid tiling and
/// NotInSpan for a side outside the basis span.
bool additivity_check(const Tiling& t, const Basis& basis, const std::vector<Rational>& ys);

enum class GoodContradiction { none, area_mismatch, conjugate_negative };

const char* to_string(GoodContradiction c);

/// Sums over the candidate square sides a_i + b_i sqrt 2.
struct GoodSquareAnalysis {
  Rational A;  // sum a_i^2
  Rational B;  // sum b_i^2
  Rational C;  // sum a_i b_i
  Sqrt2Num target_area;
  Sqrt2Num squares_area;  // (A + 2B) + 2C sqrt 2
  bool area_identity_holds = false;
  GoodContradiction contradiction = GoodContradiction::none;
};

/// Tests whether squares with the given good sides could tile the good
/// rectangle target_w x target_h by comparing areas in Q(sqrt 2):
/// area_mismatch if the total area differs, conjugate_negative if the areas
/// agree but the target's conjugate area is negative. Requires `sides`
/// nonempty.
GoodSquareAnalysis analyze_good_squares(const std::vector<Sqrt2Num>& sides,
                                        const Sqrt2Num& target_w, const Sqrt2Num& target_h);

}  // namespace sqtile
