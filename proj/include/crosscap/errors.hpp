#pragma once

#include <stdexcept>
#include <string>

namespace crosscap {

// Base for every error the library raises on bad input or failed checks.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CROSSCAP_ERROR(Name)                                          \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  }

CROSSCAP_ERROR(ParityError);
CROSSCAP_ERROR(NegativeGenus);
CROSSCAP_ERROR(NotApplicable);
CROSSCAP_ERROR(InvalidSurface);
CROSSCAP_ERROR(ReferenceError);
CROSSCAP_ERROR(ArityError);
CROSSCAP_ERROR(AssemblyMismatch);
CROSSCAP_ERROR(BigonPresent);
CROSSCAP_ERROR(UnknownCurve);
CROSSCAP_ERROR(NotATriangle);
CROSSCAP_ERROR(NotAChain);
CROSSCAP_ERROR(PreconditionViolated);
CROSSCAP_ERROR(PatternMismatch);
CROSSCAP_ERROR(NotASeparation);
CROSSCAP_ERROR(NoFact);
CROSSCAP_ERROR(BudgetTooLarge);
CROSSCAP_ERROR(InternalError);

#undef CROSSCAP_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& what)
      : Error("SyntaxError", "line " + std::to_string(line) + ", column " +
                                 std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace crosscap
