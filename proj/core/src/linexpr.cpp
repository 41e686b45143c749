#include "sqtile/linexpr.hpp"

#include "sqtile/errors.hpp"

namespace sqtile {

LinExpr::LinExpr(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(GeneratorTable::kUnit, constant);
}

LinExpr LinExpr::generator(std::size_t index, const Rational& coeff) {
  LinExpr e;
  e.set_coeff(index, coeff);
  return e;
}

Rational LinExpr::coeff(std::size_t index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? Rational{} : it->second;
}

void LinExpr::set_coeff(std::size_t index, const Rational& value) {
  if (value.is_zero()) {
    terms_.erase(index);
  } else {
    terms_[index] = value;
  }
}

bool LinExpr::is_rational() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == GeneratorTable::kUnit);
}

std::size_t LinExpr::span_size() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first + 1;
}

LinExpr LinExpr::operator-() const {
  LinExpr out = *this;
  for (auto& [i, c] : out.terms_) c = -c;
  return out;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  for (const auto& [i, c] : o.terms_) set_coeff(i, coeff(i) + c);
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  for (const auto& [i, c] : o.terms_) set_coeff(i, coeff(i) - c);
  return *this;
}

LinExpr& LinExpr::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [i, c] : terms_) c *= k;
  }
  return *this;
}

LinExpr lin_combine(const LinExpr& e1, const LinExpr& e2, const Rational& c1,
                    const Rational& c2) {
  return c1 * e1 + c2 * e2;
}

void check_table(const LinExpr& e, const GeneratorTable& table) {
  if (e.span_size() > table.size()) {
    throw TableMismatch("expression uses generator index " +
                        std::to_string(e.span_size() - 1) +
                        " but the table has " + std::to_string(table.size()) +
                        " entries");
  }
}

Interval lin_eval_interval(const LinExpr& e, const GeneratorTable& table) {
  check_table(e, table);
  Interval sum(Rational{});
  for (const auto& [i, c] : e.terms()) {
    sum += c * table[i].enclosure();
  }
  return sum;
}

Rational lin_eval_midpoint(const LinExpr& e, const GeneratorTable& table) {
  check_table(e, table);
  Rational sum;
  for (const auto& [i, c] : e.terms()) {
    sum += c * table[i].enclosure().midpoint();
  }
  return sum;
}

std::strong_ordering lin_cmp(const LinExpr& e1, const LinExpr& e2,
                             const GeneratorTable& table) {
  if (e1 == e2) {
    check_table(e1, table);
    return std::strong_ordering::equal;
  }
  const Interval d = lin_eval_interval(e1 - e2, table);
  check_table(e1, table);
  check_table(e2, table);
  if (d.hi.sign() < 0) return std::strong_ordering::less;
  if (d.lo.sign() > 0) return std::strong_ordering::greater;
  throw AmbiguousComparison(format(e1, table), format(e2, table));
}

std::string format(const LinExpr& e, const GeneratorTable& table) {
  check_table(e, table);
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : e.terms()) {
    const Rational shown = first ? c : c.abs();
    if (!first) out += c.sign() < 0 ? " - " : " + ";
    out += shown.str();
    if (i != GeneratorTable::kUnit) {
      out += '*';
      out += table[i].symbol;
    }
    first = false;
  }
  return out;
}

}  // namespace sqtile
