#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tokenshift/perm.hpp"
#include "tokenshift/puzzle.hpp"

namespace tokenshift {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

/// Base and strong generating set for the group generated by a list of
/// permutations. Deterministic (non-randomized) construction; built data is
/// immutable and safe to query concurrently.
///
/// This is the independent membership/order oracle the classifier and the
/// solvers are checked against; it never produces generator words.
class StrongGeneratingSet {
public:
  explicit StrongGeneratingSet(const std::vector<Perm>& generators);

  int degree() const { return degree_; }
  const std::vector<int>& base() const { return base_; }

  /// Exact group order: product of orbit sizes along the chain.
  BigInt order() const;

  /// True iff p sifts to the identity through the chain.
  bool contains(const Perm& p) const;

private:
  struct Level {
    int base_point = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;              // in discovery order
    std::map<int, Perm> transversal;     // orbit point -> u with u(base_point) = point
  };

  void rebuild_orbit(Level& lvl);
  void add_generator(const Perm& g, size_t level);

  int degree_ = 0;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

/// Shift permutations (Forward) of every cycle of the puzzle; the
/// configuration group's generating set.
std::vector<Perm> shift_generators(const Puzzle& p);

/// Number of connected components of the full-color token-shifting graph:
/// n! / |H|.
BigInt component_count(const Puzzle& p);

}  // namespace tokenshift
