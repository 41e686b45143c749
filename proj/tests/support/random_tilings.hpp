#pragma once

// Random generators shared by the property tests, the acceptance suite and
// the benchmarks. Everything is seeded explicitly so runs are reproducible.

#include <cmath>
#include <compare>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sqtile/basis.hpp"
#include "sqtile/errors.hpp"
#include "sqtile/linexpr.hpp"
#include "sqtile/sqrt2.hpp"
#include "sqtile/tiling.hpp"

namespace sqtile::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long max_num, long max_den, bool signed_values = true) {
  const long n = uniform(rng, signed_values ? -max_num : 0, max_num);
  const long d = uniform(rng, 1, max_den);
  return Rational(n, d);
}

inline Rational random_positive_rational(Rng& rng, long max_num, long max_den) {
  return Rational(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
}

inline Sqrt2Num random_good(Rng& rng, long max_num = 20, long max_den = 12) {
  return {random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den)};
}

inline Sqrt2Num random_positive_good(Rng& rng) {
  while (true) {
    Sqrt2Num s = random_good(rng);
    if (s.sign() > 0) return s;
  }
}

/// sqrt2, sqrt3, sqrt5 (first `n` of them) with default enclosures.
inline GeneratorTable builtin_table(std::size_t n) {
  static const char* names[] = {"sqrt2", "sqrt3", "sqrt5"};
  GeneratorTable t;
  for (std::size_t i = 0; i < n && i < 3; ++i) t.declare_default(names[i]);
  return t;
}

inline double approx(const LinExpr& e, const GeneratorTable& t) {
  return lin_eval_midpoint(e, t).to_double();
}

inline bool is_positive(const LinExpr& e, const GeneratorTable& t) {
  return lin_cmp(e, LinExpr{}, t) == std::strong_ordering::greater;
}

/// Random expression a + sum b_i g_i with small coefficients and positive value.
inline LinExpr random_positive_expr(Rng& rng, const GeneratorTable& t) {
  while (true) {
    LinExpr e(random_rational(rng, 6, 4));
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (uniform(rng, 0, 1) == 1) e += LinExpr::generator(i, random_rational(rng, 4, 3));
    }
    if (!e.is_zero() && is_positive(e, t)) return e;
  }
}

/// A cut strictly inside (0, len): either a rational fraction of len, or a
/// rescaled random generator expression.
inline LinExpr random_cut(Rng& rng, const LinExpr& len, const GeneratorTable& t) {
  if (t.size() > 1 && uniform(rng, 0, 2) != 0) {
    const LinExpr d = random_positive_expr(rng, t);
    const double frac = 0.2 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
    const long num = std::lround(frac * approx(len, t) / approx(d, t) * 16);
    if (num > 0) {
      const LinExpr c = Rational(num, 16) * d;
      try {
        if (is_positive(c, t) && is_positive(len - c, t)) return c;
      } catch (const AmbiguousComparison&) {
      }
    }
  }
  const long q = uniform(rng, 2, 7);
  return Rational(uniform(rng, 1, q - 1), q) * len;
}

inline void guillotine(Rng& rng, const GeneratorTable& t, const LinExpr& x, const LinExpr& y,
                       const LinExpr& w, const LinExpr& h, int depth, std::vector<Placement>& out) {
  if (depth == 0 || uniform(rng, 0, 4) == 0) {
    out.push_back({x, y, w, h});
    return;
  }
  if (uniform(rng, 0, 1) == 0) {
    const LinExpr c = random_cut(rng, w, t);
    guillotine(rng, t, x, y, c, h, depth - 1, out);
    guillotine(rng, t, x + c, y, w - c, h, depth - 1, out);
  } else {
    const LinExpr c = random_cut(rng, h, t);
    guillotine(rng, t, x, y, w, c, depth - 1, out);
    guillotine(rng, t, x, y + c, w, h - c, depth - 1, out);
  }
}

/// Recursive guillotine tiling of w x h, depth at most `max_depth`.
inline Tiling random_guillotine(Rng& rng, const GeneratorTable& t, const LinExpr& w,
                                const LinExpr& h, int max_depth) {
  Tiling tiling{t, w, h, {}};
  guillotine(rng, t, LinExpr{}, LinExpr{}, w, h, max_depth, tiling.tiles);
  return tiling;
}

/// Guillotine tiling of a random rectangle with incommensurable sides over
/// up to three built-in generators.
inline Tiling random_incommensurable_tiling(Rng& rng, int max_depth) {
  const GeneratorTable t = builtin_table(static_cast<std::size_t>(uniform(rng, 1, 3)));
  while (true) {
    const LinExpr w = random_positive_expr(rng, t);
    const LinExpr h = random_positive_expr(rng, t);
    if (!commensurability_ratio(w, h)) return random_guillotine(rng, t, w, h, max_depth);
  }
}

/// Side lengths in the order the basis scan expects: s0, t0, then w, h of
/// every tile.
inline std::vector<LinExpr> side_list(const Tiling& t) {
  std::vector<LinExpr> out{t.outer_w, t.outer_h};
  for (const auto& p : t.tiles) {
    out.push_back(p.w);
    out.push_back(p.h);
  }
  return out;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(SQTILE_TEST_DATA_DIR) + "/" + name;
}

/// The tiling of 1 x (2 + sqrt2) into 1/3 x sqrt3, 2/3 x sqrt3 and
/// 1 x (2 + sqrt2 - sqrt3).
inline Tiling fig4_tiling() {
  GeneratorTable t;
  const auto s2 = t.declare_default("sqrt2");
  const auto s3 = t.declare_default("sqrt3");
  const LinExpr r2 = LinExpr::generator(s2);
  const LinExpr r3 = LinExpr::generator(s3);
  const LinExpr h = LinExpr(2) + r2;
  return {t, LinExpr(1), h,
          {{LinExpr{}, LinExpr{}, Rational(1, 3), r3},
           {Rational(1, 3), LinExpr{}, Rational(2, 3), r3},
           {LinExpr{}, r3, LinExpr(1), h - r3}}};
}

// Independent re-check of a validation failure: uses half-open point
// containment at the witness corner instead of the refined grid.
inline bool covers(const Placement& p, const LinExpr& px, const LinExpr& py,
                   const GeneratorTable& t) {
  const auto le = [&](const LinExpr& a, const LinExpr& b) {
    return lin_cmp(a, b, t) != std::strong_ordering::greater;
  };
  const auto lt = [&](const LinExpr& a, const LinExpr& b) {
    return lin_cmp(a, b, t) == std::strong_ordering::less;
  };
  return le(p.x, px) && lt(px, p.right()) && le(p.y, py) && lt(py, p.top());
}

inline bool recheck_failure(const Tiling& t, const ValidationFailure& f) {
  const auto& tab = t.table;
  const auto lt = [&](const LinExpr& a, const LinExpr& b) {
    return lin_cmp(a, b, tab) == std::strong_ordering::less;
  };
  const auto nonpositive = [&](const LinExpr& e) { return !lt(LinExpr{}, e); };
  switch (f.kind) {
    case FailureKind::nonpositive_side:
      if (f.tiles.empty()) return nonpositive(t.outer_w) || nonpositive(t.outer_h);
      return nonpositive(t.tiles[f.tiles[0]].w) || nonpositive(t.tiles[f.tiles[0]].h);
    case FailureKind::out_of_bounds: {
      const auto& p = t.tiles.at(f.tiles.at(0));
      return lt(p.x, LinExpr{}) || lt(p.y, LinExpr{}) || lt(t.outer_w, p.right()) ||
             lt(t.outer_h, p.top());
    }
    case FailureKind::gap:
    case FailureKind::overlap: {
      if (!f.witness_x || !f.witness_y) return false;
      const LinExpr& px = *f.witness_x;
      const LinExpr& py = *f.witness_y;
      if (lt(px, LinExpr{}) || lt(py, LinExpr{}) || !lt(px, t.outer_w) || !lt(py, t.outer_h))
        return false;
      std::size_t count = 0;
      for (const auto& p : t.tiles) {
        if (lt(LinExpr{}, p.w) && lt(LinExpr{}, p.h) && covers(p, px, py, tab)) ++count;
      }
      return f.kind == FailureKind::gap ? count == 0 : count >= 2;
    }
    case FailureKind::ambiguous:
      return true;
  }
  return false;
}

}  // namespace sqtile::testing
