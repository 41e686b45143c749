#include "sqtile/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "sqtile/errors.hpp"

namespace sqtile {

namespace {

void pad(std::vector<Rational>& v, std::size_t n) {
  if (v.size() < n) v.resize(n);
}

void axpy(std::vector<Rational>& dst, const Rational& k, const std::vector<Rational>& src) {
  pad(dst, src.size());
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] += k * src[i];
}

// Reduces `v` against the rows. Returns the residual and accumulates into
// `rep` the element combination that was subtracted.
LinExpr reduce(LinExpr v, const std::vector<EliminationRow>& rows,
               std::vector<Rational>& rep) {
  for (const auto& row : rows) {
    const Rational c = v.coeff(row.pivot);
    if (c.is_zero()) continue;
    v -= c * row.vec;
    axpy(rep, c, row.rep);
  }
  return v;
}

}  // namespace

std::vector<Rational> Basis::coordinates(const LinExpr& p) const {
  std::vector<Rational> rep(rank());
  if (!reduce(p, rows_, rep).is_zero()) {
    throw NotInSpan("length is not a rational combination of the basis");
  }
  pad(rep, rank());
  return rep;
}

LinExpr Basis::combine(const std::vector<Rational>& coords) const {
  if (coords.size() != rank()) {
    throw std::invalid_argument("coordinate vector does not match basis rank");
  }
  LinExpr out;
  for (std::size_t i = 0; i < coords.size(); ++i) out += coords[i] * elements_[i];
  return out;
}

Basis greedy_basis(const std::vector<LinExpr>& lengths, const GeneratorTable& table) {
  Basis b;
  b.coords_.reserve(lengths.size());
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    const LinExpr& p = lengths[k];
    check_table(p, table);
    std::vector<Rational> rep(b.rank());
    LinExpr v = reduce(p, b.rows_, rep);
    if (v.is_zero()) {
      b.coords_.push_back(std::move(rep));
      continue;
    }

    // p is independent of everything selected so far: underline it.
    const std::size_t m = b.rank();
    b.elements_.push_back(p);
    b.selected_.push_back(k);

    EliminationRow row;
    row.pivot = v.terms().begin()->first;
    const Rational inv = v.terms().begin()->second.inverse();
    row.vec = inv * v;
    // v = p - sum rep_i e_i, and p = e_m.
    row.rep.assign(m + 1, Rational{});
    for (std::size_t i = 0; i < m; ++i) row.rep[i] = -inv * rep[i];
    row.rep[m] = inv;

    for (auto& other : b.rows_) {
      const Rational c = other.vec.coeff(row.pivot);
      if (c.is_zero()) continue;
      other.vec -= c * row.vec;
      axpy(other.rep, -c, row.rep);
    }
    const auto pos = std::find_if(b.rows_.begin(), b.rows_.end(),
                                  [&](const EliminationRow& r) { return r.pivot > row.pivot; });
    b.rows_.insert(pos, std::move(row));

    std::vector<Rational> unit(m + 1);
    unit[m] = 1;
    b.coords_.push_back(std::move(unit));
  }
  for (auto& c : b.coords_) pad(c, b.rank());
  for (auto& r : b.rows_) pad(r.rep, b.rank());
  return b;
}

Basis extract_basis(const std::vector<LinExpr>& lengths, const GeneratorTable& table) {
  if (lengths.size() < 2) {
    throw std::invalid_argument("basis extraction needs at least s0 and t0");
  }
  if (lengths[0].is_zero()) throw std::invalid_argument("s0 is zero");
  Basis b = greedy_basis(lengths, table);
  if (b.selected().size() < 2 || b.selected()[1] != 1) {
    throw CommensurableSides("t0 is a rational multiple of s0");
  }
  return b;
}

std::pair<Rational, Rational> coords_st(const LinExpr& p, const Basis& basis) {
  const auto c = basis.coordinates(p);
  return {c.empty() ? Rational{} : c[0], c.size() > 1 ? c[1] : Rational{}};
}

std::optional<Rational> commensurability_ratio(const LinExpr& s0, const LinExpr& t0) {
  if (s0.is_zero()) return std::nullopt;
  const auto& [index, c] = *s0.terms().begin();
  Rational q = t0.coeff(index) / c;
  if (q * s0 != t0) return std::nullopt;
  return q;
}

}  // namespace sqtile
