#include "tokenshift/word.hpp"

#include <algorithm>

namespace tokenshift {

Perm eval_word(const GeneratorWord& w, const std::vector<Perm>& gens) {
  if (gens.empty()) throw std::invalid_argument("eval_word needs at least one generator");
  Perm acc(gens.front().degree());
  for (const auto& l : w.letters) {
    const Perm& g = gens.at(static_cast<size_t>(l.gen));
    acc = acc * (l.exp >= 0 ? g : g.inverse());
  }
  return acc;
}

namespace {

constexpr int kRho = 0;
constexpr int kGate = 1;  // (1 2) or (1 2 3) depending on the construction

// Emits rho^k as letters.
void push_rotation(GeneratorWord& w, int k) {
  for (; k > 0; --k) w.push(kRho, 1);
  for (; k < 0; ++k) w.push(kRho, -1);
}

// Rewrites abstract position letters g_j^e as rho^{j-1} g^e rho^{-(j-1)},
// fusing adjacent rotations through a running offset.
GeneratorWord fuse_conjugates(const std::vector<Letter>& positional) {
  GeneratorWord out;
  int offset = 0;
  for (const auto& l : positional) {
    push_rotation(out, (l.gen - 1) - offset);
    offset = l.gen - 1;
    out.push(kGate, l.exp);
  }
  push_rotation(out, -offset);
  return out;
}

// Selection sort of the placement `f` (f[pos-1] = token at pos) by adjacent
// transpositions t_j = (j j+1); returns the positions used, in order.
std::vector<Letter> adjacent_swap_sort(std::vector<int> f) {
  const int n = static_cast<int>(f.size());
  std::vector<Letter> out;
  for (int p = n; p >= 2; --p) {
    int j = 1;
    while (f[static_cast<size_t>(j) - 1] != p) ++j;
    for (; j < p; ++j) {
      out.push_back({j, 1});
      std::swap(f[static_cast<size_t>(j) - 1], f[static_cast<size_t>(j)]);
    }
  }
  return out;
}

// Selection sort by the 3-cycles s_j = (j j+1 j+2): a token hops +2 on a
// forward application of s_j and +1 on a backward s_{j-1}. Sorts values
// n..3 into place; an even start placement ends sorted.
std::vector<Letter> adjacent_3cycle_sort(std::vector<int> f) {
  const int n = static_cast<int>(f.size());
  std::vector<Letter> out;
  auto fwd = [&f](int j) {
    int a = f[static_cast<size_t>(j) - 1];
    f[static_cast<size_t>(j) - 1] = f[static_cast<size_t>(j)];
    f[static_cast<size_t>(j)] = f[static_cast<size_t>(j) + 1];
    f[static_cast<size_t>(j) + 1] = a;
  };
  auto bwd = [&f](int j) {
    int c = f[static_cast<size_t>(j) + 1];
    f[static_cast<size_t>(j) + 1] = f[static_cast<size_t>(j)];
    f[static_cast<size_t>(j)] = f[static_cast<size_t>(j) - 1];
    f[static_cast<size_t>(j) - 1] = c;
  };
  for (int p = n; p >= 3; --p) {
    int j = 1;
    while (f[static_cast<size_t>(j) - 1] != p) ++j;
    while (j <= p - 2) {
      out.push_back({j, 1});
      fwd(j);
      j += 2;
    }
    if (j == p - 1) {
      out.push_back({p - 2, -1});
      bwd(p - 2);
    }
  }
  if (n >= 2 && f[0] != 1)
    throw OddTarget("3-cycle sort left an odd residue; target was not even");
  return out;
}

std::vector<int> inverse_one_line(const Perm& target) {
  return target.inverse().one_line();
}

}  // namespace

GeneratorWord word_sn_bubble(int n, const Perm& target) {
  if (target.degree() != n) throw std::invalid_argument("target degree mismatch");
  if (target.is_identity()) return {};
  // Sorting target^-1 to the identity applies a move product equal to target.
  return fuse_conjugates(adjacent_swap_sort(inverse_one_line(target)));
}

GeneratorWord word_an_ncycle_3cycle(int n, const Perm& target) {
  if (target.degree() != n) throw std::invalid_argument("target degree mismatch");
  if (!target.is_even()) throw OddTarget("target permutation is odd");
  if (target.is_identity()) return {};
  if (n < 3) throw std::invalid_argument("nontrivial even targets need n >= 3");
  return fuse_conjugates(adjacent_3cycle_sort(inverse_one_line(target)));
}

GeneratorWord word_an_adjacent_3cycles(int n, const Perm& target) {
  if (target.degree() != n) throw std::invalid_argument("target degree mismatch");
  if (!target.is_even()) throw OddTarget("target permutation is odd");
  if (target.is_identity()) return {};
  if (n < 3) throw std::invalid_argument("nontrivial even targets need n >= 3");
  GeneratorWord out;
  for (const auto& l : adjacent_3cycle_sort(inverse_one_line(target)))
    out.push(l.gen - 1, l.exp);  // gen id i = (i+1 i+2 i+3)
  return out;
}

}  // namespace tokenshift
