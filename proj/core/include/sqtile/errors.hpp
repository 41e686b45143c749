#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqtile {

// Base for every error the library raises on bad input or undecidable
// comparisons. Logic errors (broken internal invariants) use std::logic_error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Two expressions differ symbolically but their generator enclosures are too
// coarse to order them. Tighten the enclosures and retry.
class AmbiguousComparison : public Error {
 public:
  AmbiguousComparison(std::string lhs, std::string rhs)
      : Error("cannot order '" + lhs + "' and '" + rhs +
              "': generator enclosures too coarse"),
        lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {}

  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }

 private:
  std::string lhs_;
  std::string rhs_;
};

// An expression refers to a generator index the table does not have.
class TableMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidGenerator : public Error {
 public:
  using Error::Error;
};

class NotInSpan : public Error {
 public:
  using Error::Error;
};

// s0 and t0 have a rational ratio; there is no incommensurable basis prefix.
class CommensurableSides : public Error {
 public:
  using Error::Error;
};

class GridInconsistent : public Error {
 public:
  using Error::Error;
};

class InvalidTiling : public Error {
 public:
  using Error::Error;
};

// Syntax or schema error. line/column are 1-based; zero means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string token, std::size_t line = 0,
             std::size_t column = 0)
      : Error(what), token_(std::move(token)), line_(line), column_(column) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string token_;
  std::size_t line_;
  std::size_t column_;
};

class UndeclaredSymbol : public ParseError {
 public:
  explicit UndeclaredSymbol(const std::string& symbol, std::size_t column = 0,
                            const std::string& context = "")
      : ParseError(context + (context.empty() ? "" : ": ") + "undeclared symbol '" +
                       symbol + "'",
                   symbol, 0, column) {}
};

}  // namespace sqtile
