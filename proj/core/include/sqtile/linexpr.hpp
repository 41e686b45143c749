#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>

#include "sqtile/generator.hpp"
#include "sqtile/interval.hpp"
#include "sqtile/rational.hpp"

namespace sqtile {

/// Exact Q-linear combination of generators: sum of coeff[i] * g_i, where g_0
/// is the unit. Zero coefficients are never stored, so two expressions are
/// equal as reals (under the independence assumption) iff their maps match.
///
/// A LinExpr does not carry its table; operations that need generator values
/// take the table explicitly and throw TableMismatch on a foreign index.
class LinExpr {
 public:
  using Terms = std::map<std::size_t, Rational>;

  LinExpr() = default;
  LinExpr(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LinExpr(int constant) : LinExpr(Rational(constant)) {}  // NOLINT

  static LinExpr generator(std::size_t index, const Rational& coeff = 1);

  const Terms& terms() const { return terms_; }
  Rational coeff(std::size_t index) const;
  void set_coeff(std::size_t index, const Rational& value);

  bool is_zero() const { return terms_.empty(); }
  /// True when only the unit coefficient may be nonzero.
  bool is_rational() const;
  /// Largest generator index used plus one; 0 for the zero expression.
  std::size_t span_size() const;

  LinExpr operator-() const;
  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(const Rational& k);

  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(const Rational& k, LinExpr e) { return e *= k; }
  friend LinExpr operator*(LinExpr e, const Rational& k) { return e *= k; }

  friend bool operator==(const LinExpr&, const LinExpr&) = default;

 private:
  Terms terms_;
};

/// c1*e1 + c2*e2 with zero coefficients dropped.
LinExpr lin_combine(const LinExpr& e1, const LinExpr& e2, const Rational& c1,
                    const Rational& c2);

/// Throws TableMismatch if `e` uses an index outside `table`.
void check_table(const LinExpr& e, const GeneratorTable& table);

/// Interval enclosure of the expression's value. Exact (a point) when the
/// expression is rational.
Interval lin_eval_interval(const LinExpr& e, const GeneratorTable& table);

/// Exact rational obtained by substituting each generator's enclosure
/// midpoint. Used for rendering and numeric sanity checks only.
Rational lin_eval_midpoint(const LinExpr& e, const GeneratorTable& table);

/// Orders two expressions: Equal iff symbolically identical, otherwise by the
/// sign of the enclosure of e1 - e2. Throws AmbiguousComparison when that
/// enclosure contains zero.
std::strong_ordering lin_cmp(const LinExpr& e1, const LinExpr& e2,
                             const GeneratorTable& table);

/// Renders in the input grammar, e.g. "2 + 1*sqrt2 - 1*sqrt3".
std::string format(const LinExpr& e, const GeneratorTable& table);

}  // namespace sqtile
