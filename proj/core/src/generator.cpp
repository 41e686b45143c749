#include "sqtile/generator.hpp"

#include <cctype>

#include "sqtile/errors.hpp"

namespace sqtile {

namespace {

struct Builtin {
  std::string_view symbol;
  std::string_view lo;
  std::string_view hi;
};

// Consecutive convergents of the continued fraction, one on each side.
constexpr Builtin kBuiltins[] = {
    {"sqrt2", "54608393/38613965", "22619537/15994428"},
    {"sqrt3", "37220045/21489003", "50843527/29354524"},
    {"sqrt5", "70711162/31622993", "299537289/133957148"},
};

}  // namespace

bool is_identifier(std::string_view symbol) {
  if (symbol.empty()) return false;
  const auto first = static_cast<unsigned char>(symbol.front());
  if (!std::isalpha(first) && first != '_') return false;
  for (char c : symbol) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

std::optional<Generator> default_generator(std::string_view symbol) {
  for (const auto& b : kBuiltins) {
    if (b.symbol == symbol) {
      return Generator{std::string(b.symbol), Rational::parse(b.lo),
                       Rational::parse(b.hi)};
    }
  }
  return std::nullopt;
}

GeneratorTable::GeneratorTable() { gens_.push_back({"1", 1, 1}); }

std::size_t GeneratorTable::declare(std::string symbol, Rational lo, Rational hi) {
  if (!is_identifier(symbol)) {
    throw InvalidGenerator("invalid generator symbol '" + symbol + "'");
  }
  if (find(symbol)) {
    throw InvalidGenerator("generator '" + symbol + "' declared twice");
  }
  if (!(lo < hi)) {
    throw InvalidGenerator("generator '" + symbol + "' needs lo < hi");
  }
  if (lo.sign() <= 0 && hi.sign() >= 0) {
    throw InvalidGenerator("enclosure of '" + symbol + "' contains zero");
  }
  gens_.push_back({std::move(symbol), std::move(lo), std::move(hi)});
  return gens_.size() - 1;
}

std::size_t GeneratorTable::declare_default(std::string_view symbol) {
  auto g = default_generator(symbol);
  if (!g) {
    throw InvalidGenerator("no default enclosure for '" + std::string(symbol) + "'");
  }
  return declare(std::move(g->symbol), std::move(g->lo), std::move(g->hi));
}

std::optional<std::size_t> GeneratorTable::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].symbol == symbol) return i;
  }
  return std::nullopt;
}

std::vector<Generator> GeneratorTable::declared() const {
  return {gens_.begin() + 1, gens_.end()};
}

std::optional<std::vector<long>> GeneratorTable::find_small_relation(
    long bound) const {
  const std::size_t n = gens_.size();
  if (n < 2 || bound < 1) return std::nullopt;
  std::vector<long> c(n, -bound);
  while (true) {
    // Skip the zero vector and fix the sign of the leading nonzero entry so
    // each relation is tried once.
    std::size_t lead = 0;
    while (lead < n && c[lead] == 0) ++lead;
    if (lead < n && c[lead] > 0) {
      Interval sum(Rational{});
      for (std::size_t i = 0; i < n; ++i) {
        if (c[i] != 0) sum += Rational(c[i]) * gens_[i].enclosure();
      }
      if (sum.contains_zero()) return c;
    }
    std::size_t k = 0;
    while (k < n && c[k] == bound) c[k++] = -bound;
    if (k == n) break;
    ++c[k];
  }
  return std::nullopt;
}

}  // namespace sqtile
