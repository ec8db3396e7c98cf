#pragma once

#include <string>
#include <vector>

#include "pqsurf/group.hpp"

namespace pqsurf {

// Finite presentation: relator words are sequences of signed generator
// indices: +k means generator k, -(k+1) means its inverse.
struct Presentation {
  int n_gens = 0;
  std::vector<std::vector<int>> relators;

  void check() const;  // every relator references only indices < n_gens
};

// Word syntax: generators are single letters x,y,z,w,u,v (in that order),
// each optionally followed by a signed integer exponent, e.g. "x4", "yxy-1x-3".
std::vector<int> parse_word(const std::string& text, int n_gens);
std::string word_to_string(const std::vector<int>& word);

// Regular permutation representation via Todd-Coxeter coset enumeration over
// the trivial subgroup (HLT strategy, deterministic first-definition coset
// numbering). Throws when the table exceeds `coset_limit`.
PermGroup realize(const Presentation& p, int coset_limit = 5000);

}  // namespace pqsurf
