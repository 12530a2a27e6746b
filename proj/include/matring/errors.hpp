#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matring {

// Exit status classes, one per documented failure family.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,     // unexpected / internal
  kExitConfig = 2,      // bad parameters (non-prime p, size caps on construction, misuse)
  kExitCap = 3,         // an enumeration/pair/tuple cap was exceeded
  kExitIo = 4,
  kExitSchema = 5,
  kExitParse = 6,
  kExitDiff = 10,       // compare: reports differ
};

class Error : public std::runtime_error {
 public:
  Error(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

struct NotPrimeError : Error {
  explicit NotPrimeError(std::uint64_t p)
      : Error(kExitConfig, "NotPrime: " + std::to_string(p) + " is not prime") {}
};

struct SizeExceededError : Error {
  explicit SizeExceededError(const std::string& what)
      : Error(kExitConfig, "SizeExceeded: " + what) {}
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error(kExitConfig, "DivisionByZero: inverse of zero") {}
};

struct CtxMismatchError : Error {
  CtxMismatchError() : Error(kExitConfig, "CtxMismatch: operands belong to different fields") {}
};

struct SingularError : Error {
  explicit SingularError(const std::string& what = "matrix is singular")
      : Error(kExitConfig, "Singular: " + what) {}
};

struct CapExceededError : Error {
  explicit CapExceededError(const std::string& what)
      : Error(kExitCap, "CapExceeded: " + what) {}
};

struct RangeTooLargeError : Error {
  explicit RangeTooLargeError(const std::string& what)
      : Error(kExitConfig, "RangeTooLarge: " + what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what)
      : Error(kExitConfig, "ConfigInvalid: " + what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(kExitIo, "IoFailure: " + what) {}
};

struct SchemaMismatchError : Error {
  explicit SchemaMismatchError(const std::string& what)
      : Error(kExitSchema, "SchemaMismatch: " + what) {}
};

struct ReportParseError : Error {
  explicit ReportParseError(const std::string& what)
      : Error(kExitParse, "ParseError: " + what) {}
};

}  // namespace matring
