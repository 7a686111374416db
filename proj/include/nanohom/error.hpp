#pragma once

#include <stdexcept>
#include <string>

namespace nanohom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define NANOHOM_ERROR(Name)                     \
  struct Name : Error {                         \
    explicit Name(const std::string& what)      \
        : Error(std::string(#Name ": ") + what) {} \
  }

NANOHOM_ERROR(UnknownSymbol);
NANOHOM_ERROR(UnknownLetter);
NANOHOM_ERROR(AlphabetMismatch);
NANOHOM_ERROR(InvalidAlphabet);
NANOHOM_ERROR(NotANanoword);
NANOHOM_ERROR(InvalidMove);
NANOHOM_ERROR(BudgetInvalid);
NANOHOM_ERROR(EmptyNanoword);
NANOHOM_ERROR(InvalidSpec);
NANOHOM_ERROR(TauHasFixedPoint);
NANOHOM_ERROR(PreconditionViolated);

#undef NANOHOM_ERROR

struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("ParseError: line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

}  // namespace nanohom
