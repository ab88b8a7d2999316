#include "random_words.hpp"

#include <algorithm>
#include <vector>

namespace cpg::cli {

CyclicWord random_relator(std::mt19937_64& rng, std::uint32_t k, std::size_t length) {
  std::uniform_int_distribution<std::uint32_t> letter(0, 2 * k + 1);
  for (;;) {
    std::vector<Letter> raw;
    while (raw.size() < length) {
      const std::uint32_t c = letter(rng);
      const Letter l{c / 2, c % 2 ? -1 : 1};
      if (!raw.empty() && raw.back().is_inverse_of(l)) continue;
      raw.push_back(l);
    }
    const Word w(raw);
    if (!is_cyclically_reduced(w)) continue;
    const IndexSet inv = involved_indices(w);
    if (inv.count(0) && inv.count(k)) return CyclicWord(w);
  }
}

CyclicWord random_relator(std::mt19937_64& rng, std::uint32_t max_k, std::size_t min_length,
                          std::size_t max_length) {
  const auto k = std::uniform_int_distribution<std::uint32_t>(1, max_k)(rng);
  const auto len = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(min_length, 2), max_length)(rng);
  return random_relator(rng, k, len);
}

}  // namespace cpg::cli
