#pragma once

#include <random>
#include <vector>

#include "ttk/braid.hpp"

namespace ttk::wordgen {

// Random word on 2..max_strands strands with 1..max_crossings letters.
inline BraidWord random_word(std::mt19937_64& rng, int max_strands, int max_crossings) {
  std::uniform_int_distribution<int> strands_dist(2, max_strands);
  std::uniform_int_distribution<int> len_dist(1, max_crossings);
  const int strands = strands_dist(rng);
  const int len = len_dist(rng);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return BraidWord(strands, letters);
}

// sigma w sigma^-1 for a random letter sigma.
inline BraidWord conjugate(const BraidWord& w, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gen(1, w.strands() - 1);
  std::bernoulli_distribution neg(0.5);
  const int s = neg(rng) ? -gen(rng) : gen(rng);
  BraidWord out(w.strands(), {s});
  out.append(w);
  out.push_back(-s);
  return out;
}

// One extra strand and a trailing sigma_n^{+-1}.
inline BraidWord stabilize(const BraidWord& w, bool positive) {
  BraidWord out(w.strands() + 1, w.letters());
  out.push_back(positive ? w.strands() : -w.strands());
  return out;
}

}  // namespace ttk::wordgen
