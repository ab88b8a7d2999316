#pragma once

// Corpus files: one presentation per line,
//   w = <word>; n = <int>; assume-nonexceptional = 0,1|1,2; assume-triple-trivial
// Only "w" is required; assume-nonexceptional may repeat. '#' starts a
// comment, blank lines are ignored.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpg/free_word.hpp"

namespace cpg::cli {

struct CorpusEntry {
  std::size_t line = 0;
  std::string word_text;
  Word word;
  std::optional<std::uint32_t> n;
  std::vector<std::string> assume_pairs;  // "0,1|1,2"
  bool assume_triple = false;
};

struct CorpusError {
  std::size_t line = 0;
  std::string message;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<CorpusError> errors;
};

Corpus parse_corpus(std::string_view text);

}  // namespace cpg::cli
