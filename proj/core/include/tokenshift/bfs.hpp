#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "tokenshift/puzzle.hpp"

namespace tokenshift {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IncompatiblePlacements : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SearchLimits {
  long long depth_cap = 64;
  std::uint64_t state_cap = 50'000'000;
};

struct SearchResult {
  std::optional<long long> distance;      // nullopt: target not in the component
  std::optional<ShiftSequence> witness;   // present iff distance is
  std::uint64_t explored = 0;             // placements visited
};

/// Exact token-shifting-graph distance by breadth-first search. Neighbors
/// are every (cycle, direction) move, skipping self-loops on monochromatic
/// cycles. Runs bidirectionally unless disabled; results are identical.
/// Throws CapExceeded when a cap triggers before the answer is known.
SearchResult bfs_distance(const Puzzle& p, const TokenPlacement& f0, const TokenPlacement& ft,
                          const SearchLimits& limits = {}, bool bidirectional = true);

/// Number of placements reachable from f0.
std::uint64_t component_size(const Puzzle& p, const TokenPlacement& f0,
                             const SearchLimits& limits = {});

enum class BudgetAnswer { Yes, No };

/// Is dist(f0, ft) <= ell? Search truncated at depth ell.
BudgetAnswer decide_budget(const Puzzle& p, const TokenPlacement& f0, const TokenPlacement& ft,
                           long long ell, const SearchLimits& limits = {});

}  // namespace tokenshift
