#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sqtile/generator.hpp"
#include "sqtile/linexpr.hpp"
#include "sqtile/rational.hpp"

namespace sqtile {

/// One row of the incremental elimination. `vec` is over generator indices
/// and has a 1 at `pivot` and zeros at every other row's pivot. `rep` gives
/// the same vector as a combination of the selected basis elements.
struct EliminationRow {
  std::size_t pivot = 0;
  LinExpr vec;
  std::vector<Rational> rep;
};

/// A Q-linear basis scanned greedily from an ordered list of lengths: a length
/// is selected iff it is not a rational combination of the ones selected
/// before it. When built by extract_basis, elements[0] = s0 and
/// elements[1] = t0.
class Basis {
 public:
  const std::vector<LinExpr>& elements() const { return elements_; }
  /// Positions in the input list of the selected lengths.
  const std::vector<std::size_t>& selected() const { return selected_; }
  /// Coordinates of each input length, aligned with elements().
  const std::vector<std::vector<Rational>>& coords() const { return coords_; }
  std::size_t rank() const { return elements_.size(); }

  /// Unique coordinates of an arbitrary expression. Throws NotInSpan.
  std::vector<Rational> coordinates(const LinExpr& p) const;
  /// Combination of elements() with the given coordinates.
  LinExpr combine(const std::vector<Rational>& coords) const;

  friend Basis greedy_basis(const std::vector<LinExpr>& lengths,
                            const GeneratorTable& table);

 private:
  std::vector<LinExpr> elements_;
  std::vector<std::size_t> selected_;
  std::vector<std::vector<Rational>> coords_;
  std::vector<EliminationRow> rows_;  // sorted by pivot
};

/// Greedy scan in input order with no requirement on the first two lengths.
/// Zero lengths are never selected.
Basis greedy_basis(const std::vector<LinExpr>& lengths, const GeneratorTable& table);

/// Basis for a cut rectangle s0 x t0: `lengths` starts with s0, t0 followed by
/// every other side length. Throws CommensurableSides if t0 is a rational
/// multiple of s0 and std::invalid_argument if fewer than two lengths are
/// given or s0 is zero.
Basis extract_basis(const std::vector<LinExpr>& lengths, const GeneratorTable& table);

/// The s0- and t0-coordinates (a, b) of p. b is zero when the basis has rank
/// one. Throws NotInSpan.
std::pair<Rational, Rational> coords_st(const LinExpr& p, const Basis& basis);

/// q with t0 = q * s0 exactly, if it exists.
std::optional<Rational> commensurability_ratio(const LinExpr& s0, const LinExpr& t0);

}  // namespace sqtile
