#pragma once

#include <stdexcept>
#include <vector>

#include "tokenshift/perm.hpp"

namespace tokenshift {

struct OddTarget : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One letter of a generator word: a generator id and an exponent of +-1.
struct Letter {
  int gen = 0;
  int exp = 1;
  bool operator==(const Letter&) const = default;
};

/// A word over an abstract generator alphabet. Letters are listed in
/// application order; the evaluated product multiplies them left to right,
/// which matches applying the corresponding shifts chronologically.
struct GeneratorWord {
  std::vector<Letter> letters;

  void push(int gen, int exp = 1) { letters.push_back({gen, exp}); }
  void push_word(const GeneratorWord& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  }
  void push_inverse(const GeneratorWord& w) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
      letters.push_back({it->gen, -it->exp});
  }
  size_t size() const { return letters.size(); }
};

/// Product of the word's letters (left to right) over concrete generators.
Perm eval_word(const GeneratorWord& w, const std::vector<Perm>& gens);

/// Word over {0: rho = (1 2 ... n), 1: t = (1 2)} evaluating to target.
/// Selection sort with the swap conjugated along the rotation; length
/// bounded by kSnBubbleBound * n^2.
GeneratorWord word_sn_bubble(int n, const Perm& target);

/// Word over {0: rho = (1 2 ... n), 1: s = (1 2 3)} evaluating to an even
/// target; length bounded by kAnNcycleBound * n^2.
GeneratorWord word_an_ncycle_3cycle(int n, const Perm& target);

/// Word over the adjacent 3-cycles {gen i: (i+1 i+2 i+3), 0 <= i <= n-3}
/// evaluating to an even target; length bounded by kAnAdjacentBound * n^2.
GeneratorWord word_an_adjacent_3cycles(int n, const Perm& target);

// Word-length constants asserted by the test suite (letters, not shifts).
inline constexpr int kSnBubbleBound = 4;
inline constexpr int kAnNcycleBound = 4;
inline constexpr int kAnAdjacentBound = 1;

}  // namespace tokenshift
