#pragma once

// Text form of words:
//
//   word := term (WS term)* | "1"
//   term := "x" INT ( "^" SINT )?
//
// e.g. "x0^-1 x2 x0 x2^-2". "1" is the empty word. Formatting groups runs
// of a repeated letter into one term and omits the exponent 1.

#include <string>
#include <string_view>

#include "cpg/free_word.hpp"

namespace cpg {

// Throws ParseError (with byte position) on malformed input. The result is
// freely reduced.
Word parse_word(std::string_view text);

std::string format_word(const Word& u);
inline std::string format_word(const CyclicWord& c) { return format_word(c.base()); }

std::string format_index_set(const IndexSet& s);  // "{0, 2}"

}  // namespace cpg
