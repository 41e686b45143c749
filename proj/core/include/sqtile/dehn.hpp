#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "sqtile/basis.hpp"
#include "sqtile/hamel.hpp"
#include "sqtile/tiling.hpp"

namespace sqtile {

/// Impossibility certificate for squaring an s0 x t0 rectangle with
/// incommensurable sides: with s0, t0 leading the basis the outer y-area is y
/// itself, negative, while a square of side a s0 + b t0 + ... has y-area
/// (a + b y)^2 >= 0.
struct Certificate {
  Rational y{-1};
};

struct Tilable {
  Rational ratio;  // h = ratio * w
};

struct NotTilable {
  Certificate certificate;
};

using Verdict = std::variant<Tilable, NotTilable>;

/// Square-tilability of a w x h rectangle: Tilable iff h / w is rational.
/// Throws AmbiguousComparison if the sides' signs cannot be certified and
/// std::invalid_argument if a side is not positive or y >= 0.
Verdict decide(const LinExpr& w, const LinExpr& h, const GeneratorTable& table,
               const Rational& certificate_y = -1);

/// Re-derives the certificate's claim: y < 0, w and h incommensurable, and
/// the outer y-area at y equals y.
bool verify_certificate(const LinExpr& w, const LinExpr& h, const GeneratorTable& table,
                        const Certificate& cert);

enum class RefutationKind { geometry_invalid, tile_not_square, additivity_violated, sides_not_in_span };

const char* to_string(RefutationKind kind);

struct Refutation {
  RefutationKind kind;
  ValidationReport geometry;              // geometry_invalid
  std::optional<std::size_t> tile;        // tile_not_square, sides_not_in_span
  std::optional<AdditivityBalance> balance;  // additivity_violated
};

/// Finds why `t` is not a square tiling of its (incommensurable) outer
/// rectangle. Checks in order: geometry, squareness, basis span, additivity at
/// y. Throws std::invalid_argument if the outer rectangle is commensurable
/// and std::logic_error if no check fires, which Dehn's theorem rules out
/// unless the declared generators are dependent.
Refutation refute_square_tiling(const Tiling& t, const Rational& y = -1);

}  // namespace sqtile
