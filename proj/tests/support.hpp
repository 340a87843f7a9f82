#pragma once

#include <random>
#include <vector>

#include "words.hpp"

namespace testing_support {

// Random freely reduced word over generators 0..rank-1, length <= max_len.
inline ord3::Word random_word(std::mt19937& rng, int rank, int max_len, int min_len = 0) {
  std::uniform_int_distribution<int> len_d(min_len, max_len), gen_d(0, rank - 1), sign_d(0, 1);
  const int len = len_d(rng);
  ord3::Word w;
  while (w.length() < len) w.append(gen_d(rng), sign_d(rng) ? 1 : -1);
  return w;
}

// Random word whose letters are not reduced against each other.
inline std::vector<ord3::Syllable<int>> random_raw(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen_d(0, rank - 1), exp_d(-2, 2);
  std::vector<ord3::Syllable<int>> out;
  for (int i = 0; i < len; ++i) out.push_back({gen_d(rng), exp_d(rng)});
  return out;
}

}  // namespace testing_support
