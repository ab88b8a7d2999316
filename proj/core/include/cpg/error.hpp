#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cpg {

enum class ErrorCode {
  kIndexOutOfAlphabet,
  kEmptyWord,
  kNotCyclicallyReduced,
  kInvalidRelator,
  kNotMagnus,
  kInvalidPair,
  kDegeneratePair,
  kCondition3Violated,
  kTooLong,
  kParse,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure in the library is reported as a cpg::Error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the 0-based byte offset at which parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cpg
