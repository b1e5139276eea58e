#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace markedpoly {

// Base of every error raised by the library. Subclasses name the failure;
// what() carries the human readable detail.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define MARKEDPOLY_ERROR(Name)                                                 \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}       \
  }

MARKEDPOLY_ERROR(CycleDetected);
MARKEDPOLY_ERROR(DuplicateElement);
MARKEDPOLY_ERROR(UnknownElement);
MARKEDPOLY_ERROR(UnknownElementInCover);
MARKEDPOLY_ERROR(ExtremalNotMarked);
MARKEDPOLY_ERROR(MarkingDomainMismatch);
MARKEDPOLY_ERROR(IndexMismatch);
MARKEDPOLY_ERROR(NonIntegralMarking);
MARKEDPOLY_ERROR(EmptyPolytope);
MARKEDPOLY_ERROR(InvalidWeight);
MARKEDPOLY_ERROR(CharacterizationMismatch);
MARKEDPOLY_ERROR(OutOfRange);

#undef MARKEDPOLY_ERROR

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("ParseError: line " + std::to_string(line) + ": " + reason),
        line_(line), reason_(reason) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

private:
  std::size_t line_;
  std::string reason_;
};

} // namespace markedpoly
