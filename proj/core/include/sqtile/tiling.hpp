#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sqtile/generator.hpp"
#include "sqtile/linexpr.hpp"

namespace sqtile {

/// Axis-aligned tile with lower-left corner (x, y).
struct Placement {
  LinExpr x;
  LinExpr y;
  LinExpr w;
  LinExpr h;

  LinExpr right() const { return x + w; }
  LinExpr top() const { return y + h; }
  friend bool operator==(const Placement&, const Placement&) = default;
};

/// A rectangle [0, outer_w] x [0, outer_h] claimed to be cut into `tiles`.
/// Nothing is enforced at construction; validate() decides.
struct Tiling {
  GeneratorTable table;
  LinExpr outer_w;
  LinExpr outer_h;
  std::vector<Placement> tiles;

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

/// Every cut line extended across the whole rectangle. Cells are indexed
/// row-major from the bottom-left: cell (ix, iy) spans
/// [xcuts[ix], xcuts[ix+1]] x [ycuts[iy], ycuts[iy+1]].
struct RefinedGrid {
  std::vector<LinExpr> xcuts;
  std::vector<LinExpr> ycuts;
  std::vector<std::size_t> owner;  // covering tile of each cell

  std::size_t columns() const { return xcuts.empty() ? 0 : xcuts.size() - 1; }
  std::size_t rows() const { return ycuts.empty() ? 0 : ycuts.size() - 1; }
  std::size_t cell_count() const { return columns() * rows(); }
  std::size_t owner_of(std::size_t ix, std::size_t iy) const {
    return owner.at(iy * columns() + ix);
  }
};

enum class FailureKind { overlap, gap, out_of_bounds, nonpositive_side, ambiguous };

const char* to_string(FailureKind kind);

struct ValidationFailure {
  FailureKind kind;
  /// Offending tiles; empty for a gap or an outer-rectangle problem.
  std::vector<std::size_t> tiles;
  /// Grid cell (column, row) for overlap and gap.
  std::optional<std::size_t> cell_x;
  std::optional<std::size_t> cell_y;
  /// Lower-left corner of the witness cell, or the message for `ambiguous`.
  std::optional<LinExpr> witness_x;
  std::optional<LinExpr> witness_y;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  bool valid() const { return failures.empty(); }
};

/// Grid refinement of a tiling. Throws GridInconsistent when the tiles do not
/// cover each cell exactly once (or fall outside the rectangle), and
/// AmbiguousComparison when cut coordinates cannot be ordered.
RefinedGrid refine(const Tiling& t);

/// Exact check that `t` is a genuine cutting: positive sides, every tile
/// inside the outer rectangle, every refined cell covered exactly once.
/// Never throws on bad geometry; failures are data.
ValidationReport validate(const Tiling& t);

/// True iff w and h are symbolically the same expression.
bool is_square(const Placement& p);

}  // namespace sqtile
