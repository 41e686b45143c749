#include "sqtile/dehn.hpp"

#include <stdexcept>

#include "sqtile/errors.hpp"

namespace sqtile {

const char* to_string(RefutationKind kind) {
  switch (kind) {
    case RefutationKind::geometry_invalid: return "geometry_invalid";
    case RefutationKind::tile_not_square: return "tile_not_square";
    case RefutationKind::additivity_violated: return "additivity_violated";
    case RefutationKind::sides_not_in_span: return "sides_not_in_span";
  }
  return "unknown";
}

Verdict decide(const LinExpr& w, const LinExpr& h, const GeneratorTable& table,
               const Rational& certificate_y) {
  if (lin_cmp(w, LinExpr{}, table) != std::strong_ordering::greater ||
      lin_cmp(h, LinExpr{}, table) != std::strong_ordering::greater) {
    throw std::invalid_argument("rectangle sides must be positive");
  }
  if (certificate_y.sign() >= 0) {
    throw std::invalid_argument("certificate y must be negative");
  }
  if (auto q = commensurability_ratio(w, h)) return Tilable{*q};
  return NotTilable{Certificate{certificate_y}};
}

bool verify_certificate(const LinExpr& w, const LinExpr& h, const GeneratorTable& table,
                        const Certificate& cert) {
  if (cert.y.sign() >= 0) return false;
  if (commensurability_ratio(w, h)) return false;
  const Basis basis = extract_basis({w, h}, table);
  return y_area(w, h, basis, cert.y) == cert.y;
}

Refutation refute_square_tiling(const Tiling& t, const Rational& y) {
  if (y.sign() >= 0) throw std::invalid_argument("refutation y must be negative");
  if (commensurability_ratio(t.outer_w, t.outer_h)) {
    throw std::invalid_argument("outer rectangle has a rational side ratio");
  }

  Refutation r{RefutationKind::geometry_invalid, validate(t), {}, {}};
  if (!r.geometry.valid()) return r;

  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    if (!is_square(t.tiles[i])) {
      r.kind = RefutationKind::tile_not_square;
      r.tile = i;
      return r;
    }
  }

  std::vector<LinExpr> lengths{t.outer_w, t.outer_h};
  for (const auto& p : t.tiles) {
    lengths.push_back(p.w);
    lengths.push_back(p.h);
  }
  const Basis basis = extract_basis(lengths, t.table);
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    try {
      (void)basis.coordinates(t.tiles[i].w);
      (void)basis.coordinates(t.tiles[i].h);
    } catch (const NotInSpan&) {
      r.kind = RefutationKind::sides_not_in_span;
      r.tile = i;
      return r;
    }
  }

  auto bal = y_area_balance(t, basis, y);
  if (!bal.holds()) {
    r.kind = RefutationKind::additivity_violated;
    r.balance = std::move(bal);
    return r;
  }
  throw std::logic_error(
      "valid square tiling of an incommensurable rectangle; the declared "
      "generators must be linearly dependent");
}

}  // namespace sqtile
