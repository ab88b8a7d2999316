#include "cpg/word_text.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "cpg/error.hpp"

namespace cpg {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, "expected a word");
    if (text_[pos_] == '1') {
      const std::size_t at = pos_;
      ++pos_;
      skip_space();
      if (pos_ != text_.size()) throw ParseError(at + 1, "unexpected text after '1'");
      return {};
    }
    std::vector<Letter> raw;
    while (true) {
      parse_term(raw);
      const std::size_t before = pos_;
      skip_space();
      if (pos_ == text_.size()) break;
      if (pos_ == before) throw ParseError(pos_, "expected whitespace between terms");
    }
    return reduce(raw);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  unsigned long parse_decimal(const char* what) {
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) throw ParseError(pos_, std::string("expected ") + what);
    unsigned long value = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      const unsigned long digit = static_cast<unsigned long>(text_[pos_] - '0');
      if (value > (std::numeric_limits<GenIndex>::max() - digit) / 10) {
        throw ParseError(pos_, std::string(what) + " too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  void parse_term(std::vector<Letter>& raw) {
    if (pos_ >= text_.size() || text_[pos_] != 'x') throw ParseError(pos_, "expected 'x'");
    ++pos_;
    const auto index = static_cast<GenIndex>(parse_decimal("generator subscript"));
    long exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      int sign = 1;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        sign = -1;
        ++pos_;
      }
      const std::size_t at = pos_;
      const unsigned long magnitude = parse_decimal("exponent");
      if (magnitude == 0) throw ParseError(at, "exponent must be nonzero");
      if (magnitude > 1'000'000) throw ParseError(at, "exponent too large");
      exponent = sign * static_cast<long>(magnitude);
    }
    const Letter l{index, exponent < 0 ? -1 : 1};
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) raw.push_back(l);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return Parser(text).parse(); }

std::string format_word(const Word& u) {
  if (u.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < u.size()) {
    std::size_t j = i;
    while (j < u.size() && u[j] == u[i]) ++j;
    const long exponent = static_cast<long>(j - i) * u[i].sign;
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(u[i].index);
    if (exponent != 1) {
      out += '^';
      out += std::to_string(exponent);
    }
    i = j;
  }
  return out;
}

std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  bool first = true;
  for (GenIndex i : s) {
    if (!first) out += ", ";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace cpg
