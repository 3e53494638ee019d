#pragma once

#include <stdexcept>
#include <string>

namespace bct {

enum class ErrorCode {
  DivisionByZero,
  OrderMismatch,
  InvalidParameters,
  InvalidGenerators,
  InvalidRoot,
  TooLarge,
  NotDistinct,
  NotAdmissible,
  NotAdmissiblePair,
  InternalInconsistency,
  ParseError,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Fires on violated internal invariants; never used for bad user input.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::InternalInconsistency, what);
}

}  // namespace bct
