#include "cpg/error.hpp"

namespace cpg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfAlphabet: return "IndexOutOfAlphabet";
    case ErrorCode::kEmptyWord: return "EmptyWord";
    case ErrorCode::kNotCyclicallyReduced: return "NotCyclicallyReduced";
    case ErrorCode::kInvalidRelator: return "InvalidRelator";
    case ErrorCode::kNotMagnus: return "NotMagnus";
    case ErrorCode::kInvalidPair: return "InvalidPair";
    case ErrorCode::kDegeneratePair: return "DegeneratePair";
    case ErrorCode::kCondition3Violated: return "Condition3Violated";
    case ErrorCode::kTooLong: return "TooLong";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(ErrorCode::kParse, what + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace cpg
