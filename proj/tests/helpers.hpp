#pragma once

#include <random>
#include <vector>

#include "knotrep/words.hpp"

namespace knotrep::testing {

/// Unreduced random letter sequence of the given length.
inline std::vector<Syllable> random_letters(const AlphabetPtr& a, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(a->size() - 1));
  std::bernoulli_distribution sign(0.5);
  std::vector<Syllable> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back({GeneratorId{gen(rng)}, sign(rng) ? 1 : -1});
  return out;
}

inline Word random_word(const AlphabetPtr& a, std::size_t max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return Word::reduce(a, random_letters(a, len(rng), rng));
}

}  // namespace knotrep::testing
