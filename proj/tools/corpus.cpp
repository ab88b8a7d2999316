#include "corpus.hpp"

#include <charconv>
#include <stdexcept>

#include "cpg/error.hpp"
#include "cpg/word_text.hpp"

namespace cpg::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void parse_field(std::string_view field, CorpusEntry& entry) {
  const auto eq = field.find('=');
  const std::string_view key = trim(field.substr(0, eq));
  const std::string_view value = eq == std::string_view::npos ? std::string_view{} : trim(field.substr(eq + 1));
  if (key == "assume-triple-trivial" && eq == std::string_view::npos) {
    entry.assume_triple = true;
    return;
  }
  if (eq == std::string_view::npos) throw std::invalid_argument("expected key = value, got '" + std::string(field) + "'");
  if (key == "w") {
    entry.word_text = std::string(value);
    try {
      entry.word = parse_word(value);
    } catch (const ParseError& e) {
      throw std::invalid_argument(std::string(e.what()) + " (column " + std::to_string(e.position() + 1) + " of the word)");
    }
  } else if (key == "n") {
    std::uint32_t n = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc{} || ptr != value.data() + value.size() || n == 0) {
      throw std::invalid_argument("n must be a positive integer, got '" + std::string(value) + "'");
    }
    entry.n = n;
  } else if (key == "assume-nonexceptional") {
    entry.assume_pairs.emplace_back(value);
  } else {
    throw std::invalid_argument("unknown key '" + std::string(key) + "'");
  }
}

}  // namespace

Corpus parse_corpus(std::string_view text) {
  Corpus corpus;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    CorpusEntry entry;
    entry.line = line_no;
    try {
      std::size_t start = 0;
      while (start <= line.size()) {
        auto semi = line.find(';', start);
        if (semi == std::string_view::npos) semi = line.size();
        const std::string_view field = trim(line.substr(start, semi - start));
        if (!field.empty()) parse_field(field, entry);
        start = semi + 1;
      }
      if (entry.word_text.empty()) throw std::invalid_argument("missing 'w = <word>'");
      corpus.entries.push_back(std::move(entry));
    } catch (const std::invalid_argument& e) {
      corpus.errors.push_back({line_no, e.what()});
    }
  }
  return corpus;
}

}  // namespace cpg::cli
