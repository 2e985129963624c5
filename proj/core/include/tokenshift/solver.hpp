#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tokenshift/classify.hpp"
#include "tokenshift/perm.hpp"
#include "tokenshift/puzzle.hpp"
#include "tokenshift/word.hpp"

namespace tokenshift {

struct NotInGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigurationNotMatched : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedWalk : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Product of the sequence's shift permutations, in application order.
Perm sequence_perm(const Puzzle& p, const ShiftSequence& s);

/// Relabeling of a properly interconnected pair of cycles onto the canonical
/// coordinates alpha = (1 2 .. a), beta = (a .. m) or (a-1 a .. m), a <= b.
struct PairCanonical {
  ConnectionKind kind = ConnectionKind::OneVertex;
  int a = 0, b = 0, m = 0;  // cycle lengths and union size
  Perm phi;                 // full-degree relabeling; union -> 1..m
  bool swapped = false;     // second tuple plays the alpha role
  bool flip_alpha = false;  // canonical Forward = original cycle reversed
  bool flip_beta = false;
};

PairCanonical canonicalize_pair(const std::vector<int>& cyc1, const std::vector<int>& cyc2,
                                int degree);

/// Word over {0: alpha, 1: beta} in canonical coordinates realizing an
/// arbitrary group element of the two-cycle puzzle. Throws NotInGroup when
/// the target is not generated (parity, or the (4,4) membership test).
GeneratorWord canonical_two_cycle_word(const PairCanonical& pc, const Perm& target_m);

/// Word over {0: cyc1 forward, 1: cyc2 forward} realizing a target supported
/// on the union of the two cycles.
GeneratorWord solve_pair_word(const std::vector<int>& cyc1, const std::vector<int>& cyc2,
                              int degree, const Perm& target);

/// Shift sequences realizing a full-color target permutation for the
/// two-cycle puzzle families.
ShiftSequence solve_1connected(const Puzzle& p, const Perm& target);
ShiftSequence solve_2connected(const Puzzle& p, const Perm& target);

/// Realizes a target supported on the union of cycles c1, c2 (which induce a
/// two-cycle 2-connected (4,4) configuration) with the help of a third
/// properly interconnected cycle drawn from `third_candidates`.
ShiftSequence word_44_plus_third(const Puzzle& p, int c1, int c2,
                                 const std::vector<int>& third_candidates, const Perm& target);

/// Covering vertex sequence over the relevant cycles: every vertex appears,
/// any three consecutive entries are distinct, and every consecutive triple
/// is realizable through a properly interconnected pair of relevant cycles.
std::vector<int> build_walk(const Puzzle& p, const std::vector<int>& relevant);

/// Word over the walk alphabet {gen i: (w_{i+1} w_{i+2} w_{i+3}), 0-based i}
/// realizing an even target; any single 3-cycle costs at most 3n letters.
GeneratorWord word_walk_3cycles(const std::vector<int>& walk, int n, const Perm& target);

ShiftSequence solve_generalized(const Puzzle& p, const std::vector<int>& relevant,
                                const Perm& target);

struct SolveOutcome {
  enum class Status { Solved, Unreachable, CapExceeded };
  Status status = Status::Unreachable;
  ShiftSequence sequence;  // meaningful when Solved
  std::string provenance;
};

/// Top-level colored solve: lifts the placements to a permutation target,
/// fixes parity through a same-colored transposition when possible, and
/// dispatches to the family solver. Every returned sequence is re-applied
/// and checked before being handed out.
SolveOutcome solve(const Puzzle& p, const TokenPlacement& f0, const TokenPlacement& ft);

/// Cancels adjacent mutually inverse moves (a length-2 cycle shift is its
/// own inverse).
ShiftSequence peephole(const Puzzle& p, const ShiftSequence& s);

// Documented shift-count bounds, asserted by the test suite:
//   two-cycle families:  |sequence| <= kTwoCycleShiftFactor * n^2
//   generalized puzzles: |sequence| <= kGeneralizedShiftFactor * n^5
inline constexpr long long kTwoCycleShiftFactor = 40;
inline constexpr long long kGeneralizedShiftFactor = 40;

}  // namespace tokenshift
