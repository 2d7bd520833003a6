#pragma once

#include <stdexcept>
#include <string>

namespace motivzeta {

// Base of every library error. code() is the stable name printed by the CLI.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define MZ_DECLARE_ERROR(Name)                                         \
  struct Name : Error {                                                \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  }

MZ_DECLARE_ERROR(DivisionByZero);
MZ_DECLARE_ERROR(UnsupportedExpansion);
MZ_DECLARE_ERROR(UnknownClassValue);
MZ_DECLARE_ERROR(DegenerateInput);
MZ_DECLARE_ERROR(TruncationMismatch);
MZ_DECLARE_ERROR(NotInSrForm);
MZ_DECLARE_ERROR(InvalidGerm);
MZ_DECLARE_ERROR(UnsupportedDimension);
MZ_DECLARE_ERROR(SchemaError);
MZ_DECLARE_ERROR(OracleUndefined);
MZ_DECLARE_ERROR(InconsistentOracle);
MZ_DECLARE_ERROR(ValidationFailure);

#undef MZ_DECLARE_ERROR

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int column)
      : Error("ParseError", msg + " at line " + std::to_string(line) + ", column " +
                                std::to_string(column)),
        line(line), column(column) {}
  int line;
  int column;
};

}  // namespace motivzeta
