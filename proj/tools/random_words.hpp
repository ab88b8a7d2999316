#pragma once

#include <cstdint>
#include <random>

#include "cpg/free_word.hpp"

namespace cpg::cli {

// Uniform letters over x0..xk and their inverses, redrawn until the word is
// cyclically reduced and involves both x0 and xk.
CyclicWord random_relator(std::mt19937_64& rng, std::uint32_t k, std::size_t length);

// k uniform in 1..max_k, length uniform in 2..max_length.
CyclicWord random_relator(std::mt19937_64& rng, std::uint32_t max_k, std::size_t min_length,
                          std::size_t max_length);

}  // namespace cpg::cli
