#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bihom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BIHOM_ERROR(Name)                     \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  };

BIHOM_ERROR(DivisionByZero)
BIHOM_ERROR(DenominatorVanishes)
BIHOM_ERROR(UnknownParameter)
BIHOM_ERROR(UnknownName)
BIHOM_ERROR(ArityMismatch)
BIHOM_ERROR(SpaceMismatch)
BIHOM_ERROR(RingMismatch)
BIHOM_ERROR(NotInvertible)
BIHOM_ERROR(ConstraintViolated)
BIHOM_ERROR(MissingOp)
BIHOM_ERROR(MissingMap)
BIHOM_ERROR(PredicateFailed)
BIHOM_ERROR(Inconsistent)
BIHOM_ERROR(UnknownEntry)
BIHOM_ERROR(SchemaError)
BIHOM_ERROR(IndexOutOfRange)

#undef BIHOM_ERROR

// Parse errors carry where they happened: a byte offset for one-line
// grammars, a line number for files.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class LinearityViolation : public Error {
 public:
  LinearityViolation(const std::string& var, std::size_t term)
      : Error("variable '" + var + "' does not occur exactly once in term " + std::to_string(term)),
        var_(var), term_(term) {}
  const std::string& variable() const { return var_; }
  std::size_t term() const { return term_; }

 private:
  std::string var_;
  std::size_t term_;
};

}  // namespace bihom
