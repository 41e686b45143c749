#include "sqtile/expr_parse.hpp"

#include <cctype>
#include <string>

#include "sqtile/errors.hpp"

namespace sqtile {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const GeneratorTable& table)
      : text_(text), table_(table) {}

  LinExpr run() {
    LinExpr out = term();
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      LinExpr t = term();
      out = op == '+' ? out + t : out - t;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string token = at_end() ? "<end>" : std::string(1, text_[pos_]);
    if (!at_end()) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      if (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')
        token = std::string(text_.substr(pos_, end - pos_));
    }
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " near '" +
                         token + "'",
                     token, 1, pos_ + 1);
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  std::size_t symbol() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                         text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (!is_identifier(name)) {
      pos_ = start;
      fail("expected symbol");
    }
    const auto idx = table_.find(name);
    if (!idx || *idx == GeneratorTable::kUnit) {
      throw UndeclaredSymbol(std::string(name), start + 1);
    }
    return *idx;
  }

  LinExpr term() {
    skip_ws();
    if (at_end()) fail("expected term");
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return LinExpr::generator(symbol());
    }
    const std::size_t start = pos_;
    if (c == '-') {
      ++pos_;
      skip_ws();
    }
    std::string lit(text_.substr(start, 1) == "-" ? "-" : "");
    lit += digits();
    skip_ws();
    if (!at_end() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      lit += '/';
      lit += digits();
    }
    Rational value;
    try {
      value = Rational::parse(lit);
    } catch (const DivisionByZero&) {
      pos_ = start;
      fail("zero denominator");
    }
    skip_ws();
    if (!at_end() && text_[pos_] == '*') {
      ++pos_;
      skip_ws();
      return LinExpr::generator(symbol(), value);
    }
    return LinExpr(value);
  }

  std::string_view text_;
  const GeneratorTable& table_;
  std::size_t pos_ = 0;
};

}  // namespace

LinExpr parse_expr(std::string_view text, const GeneratorTable& table) {
  return Parser(text, table).run();
}

}  // namespace sqtile
