#pragma once

// Pieces shared by the structured matcher and the brute-force oracle. Only
// letter classification and verdict wording live here; each engine does its
// own enumeration and root finding.

#include "cpg/formcheck.hpp"

namespace cpg::detail {

LetterClass classify(Letter l, const MagnusPair& pair);
bool is_degenerate(const MagnusPair& pair);

extern const char* const kInsideOneSubgroup;
extern const char* const kExponentBound;

}  // namespace cpg::detail
