#include "sqtile/tiling.hpp"

#include <algorithm>

#include "sqtile/errors.hpp"

namespace sqtile {

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::overlap: return "overlap";
    case FailureKind::gap: return "gap";
    case FailureKind::out_of_bounds: return "out_of_bounds";
    case FailureKind::nonpositive_side: return "nonpositive_side";
    case FailureKind::ambiguous: return "ambiguous";
  }
  return "unknown";
}

namespace {

bool positive(const LinExpr& e, const GeneratorTable& table) {
  return lin_cmp(e, LinExpr{}, table) == std::strong_ordering::greater;
}

std::vector<LinExpr> sorted_cuts(std::vector<LinExpr> cuts, const GeneratorTable& table) {
  std::sort(cuts.begin(), cuts.end(), [&](const LinExpr& a, const LinExpr& b) {
    return lin_cmp(a, b, table) == std::strong_ordering::less;
  });
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

std::size_t index_of(const std::vector<LinExpr>& cuts, const LinExpr& v,
                     const GeneratorTable& table) {
  const auto it = std::lower_bound(cuts.begin(), cuts.end(), v, [&](const LinExpr& a, const LinExpr& b) {
    return lin_cmp(a, b, table) == std::strong_ordering::less;
  });
  if (it == cuts.end() || *it != v) throw std::logic_error("cut coordinate missing from grid");
  return static_cast<std::size_t>(it - cuts.begin());
}

struct Analysis {
  RefinedGrid grid;
  std::vector<ValidationFailure> failures;
};

// Builds the refined grid and records every geometric failure. Throws only
// AmbiguousComparison (and TableMismatch for malformed input).
Analysis analyze(const Tiling& t) {
  const auto& table = t.table;
  Analysis out;
  auto& failures = out.failures;

  check_table(t.outer_w, table);
  check_table(t.outer_h, table);
  for (const auto& p : t.tiles) {
    check_table(p.x, table);
    check_table(p.y, table);
    check_table(p.w, table);
    check_table(p.h, table);
  }

  if (!positive(t.outer_w, table) || !positive(t.outer_h, table)) {
    failures.push_back({FailureKind::nonpositive_side, {}, {}, {}, {}, {},
                        "outer rectangle has a nonpositive side"});
    return out;
  }

  std::vector<bool> usable(t.tiles.size(), false);
  std::vector<LinExpr> xs{LinExpr{}, t.outer_w};
  std::vector<LinExpr> ys{LinExpr{}, t.outer_h};
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const auto& p = t.tiles[i];
    if (!positive(p.w, table) || !positive(p.h, table)) {
      failures.push_back({FailureKind::nonpositive_side, {i}, {}, {}, p.x, p.y,
                          "tile has a nonpositive side"});
      continue;
    }
    usable[i] = true;
    xs.push_back(p.x);
    xs.push_back(p.right());
    ys.push_back(p.y);
    ys.push_back(p.top());
  }
  xs = sorted_cuts(std::move(xs), table);
  ys = sorted_cuts(std::move(ys), table);

  const std::size_t x0 = index_of(xs, LinExpr{}, table);
  const std::size_t xw = index_of(xs, t.outer_w, table);
  const std::size_t y0 = index_of(ys, LinExpr{}, table);
  const std::size_t yh = index_of(ys, t.outer_h, table);
  const std::size_t cols = xw - x0;
  const std::size_t rows = yh - y0;

  std::vector<std::vector<std::size_t>> cover(cols * rows);
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    if (!usable[i]) continue;
    const auto& p = t.tiles[i];
    const std::size_t l = index_of(xs, p.x, table);
    const std::size_t r = index_of(xs, p.right(), table);
    const std::size_t b = index_of(ys, p.y, table);
    const std::size_t u = index_of(ys, p.top(), table);
    if (l < x0 || r > xw || b < y0 || u > yh) {
      failures.push_back({FailureKind::out_of_bounds, {i}, {}, {}, p.x, p.y,
                          "tile extends outside the outer rectangle"});
    }
    for (std::size_t iy = std::max(b, y0); iy < std::min(u, yh); ++iy) {
      for (std::size_t ix = std::max(l, x0); ix < std::min(r, xw); ++ix) {
        cover[(iy - y0) * cols + (ix - x0)].push_back(i);
      }
    }
  }

  out.grid.xcuts.assign(xs.begin() + static_cast<std::ptrdiff_t>(x0),
                        xs.begin() + static_cast<std::ptrdiff_t>(xw) + 1);
  out.grid.ycuts.assign(ys.begin() + static_cast<std::ptrdiff_t>(y0),
                        ys.begin() + static_cast<std::ptrdiff_t>(yh) + 1);
  out.grid.owner.assign(cols * rows, 0);
  for (std::size_t iy = 0; iy < rows; ++iy) {
    for (std::size_t ix = 0; ix < cols; ++ix) {
      const auto& c = cover[iy * cols + ix];
      if (c.size() == 1) {
        out.grid.owner[iy * cols + ix] = c.front();
        continue;
      }
      const bool gap = c.empty();
      failures.push_back({gap ? FailureKind::gap : FailureKind::overlap, c, ix, iy,
                          out.grid.xcuts[ix], out.grid.ycuts[iy],
                          gap ? "cell not covered by any tile" : "cell covered by several tiles"});
    }
  }
  return out;
}

}  // namespace

RefinedGrid refine(const Tiling& t) {
  Analysis a = analyze(t);
  if (!a.failures.empty()) {
    const auto& f = a.failures.front();
    throw GridInconsistent(std::string(to_string(f.kind)) + ": " + f.detail);
  }
  return std::move(a.grid);
}

ValidationReport validate(const Tiling& t) {
  ValidationReport report;
  try {
    report.failures = analyze(t).failures;
  } catch (const AmbiguousComparison& e) {
    report.failures.push_back({FailureKind::ambiguous, {}, {}, {}, {}, {}, e.what()});
  }
  return report;
}

bool is_square(const Placement& p) { return p.w == p.h; }

}  // namespace sqtile
