#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqtile/interval.hpp"
#include "sqtile/rational.hpp"

namespace sqtile {

/// A named real number known only through a certified enclosure lo <= v <= hi.
/// The enclosure must not contain zero so that signs stay decidable.
struct Generator {
  std::string symbol;
  Rational lo;
  Rational hi;

  Interval enclosure() const { return {lo, hi}; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered set of generators. Index 0 is always the implicit unit "1" with
/// enclosure [1, 1]; user generators follow in declaration order.
///
/// Q-linear independence of the declared generators is trusted, never proven.
/// find_small_relation() offers a numeric sanity check.
class GeneratorTable {
 public:
  static constexpr std::size_t kUnit = 0;

  GeneratorTable();

  /// Declares a generator and returns its index. Throws InvalidGenerator for a
  /// malformed or duplicate symbol, lo >= hi, or an enclosure touching zero.
  std::size_t declare(std::string symbol, Rational lo, Rational hi);
  /// Declares one of the built-in constants (sqrt2, sqrt3, sqrt5) with its
  /// default enclosure.
  std::size_t declare_default(std::string_view symbol);

  std::optional<std::size_t> find(std::string_view symbol) const;
  const Generator& operator[](std::size_t index) const { return gens_.at(index); }
  std::size_t size() const { return gens_.size(); }
  /// User-declared generators, excluding the unit.
  std::vector<Generator> declared() const;

  /// Searches integer vectors c with |c_i| <= bound (over the unit and every
  /// generator) whose combined enclosure contains zero. A hit means the
  /// generators may be Q-linearly dependent. Exhaustive, so only practical
  /// for a handful of generators.
  std::optional<std::vector<long>> find_small_relation(long bound) const;

  friend bool operator==(const GeneratorTable&, const GeneratorTable&) = default;

 private:
  std::vector<Generator> gens_;
};

/// Default enclosure for a built-in constant, if the symbol names one.
/// Brackets are consecutive continued-fraction convergents, good to about
/// 15 decimal digits.
std::optional<Generator> default_generator(std::string_view symbol);

bool is_identifier(std::string_view symbol);

}  // namespace sqtile
