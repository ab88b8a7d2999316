#pragma once

// Certificate file format: UTF-8 JSON with a fixed field order
//   word, k, theorem, t (only for the purity rule), n_min (null when no rule
//   fired), checks, assumptions, notes, conclusion
// so that identical certificates serialize to identical bytes.

#include <string>
#include <string_view>

#include "cpg/certify.hpp"

namespace cpg {

// Two-space indented, trailing newline.
std::string to_json(const Certificate& cert);

// Inverse of to_json(). Throws ParseError on malformed JSON or fields.
Certificate certificate_from_json(std::string_view text);

// JSON object for one verdict, as it appears inside "checks".
std::string verdict_to_json(const PairVerdict& verdict);

}  // namespace cpg
