#include "bct/error.hpp"

namespace bct {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::InvalidGenerators: return "InvalidGenerators";
    case ErrorCode::InvalidRoot: return "InvalidRoot";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotDistinct: return "NotDistinct";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotAdmissiblePair: return "NotAdmissiblePair";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace bct
