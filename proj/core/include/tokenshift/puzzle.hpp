#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tokenshift/perm.hpp"

namespace tokenshift {

enum class Direction : std::uint8_t { Forward, Backward };

inline Direction flip(Direction d) {
  return d == Direction::Forward ? Direction::Backward : Direction::Forward;
}

struct ShiftMove {
  int cycle = 0;  // 0-based index into Puzzle::cycles
  Direction dir = Direction::Forward;
  bool operator==(const ShiftMove&) const = default;
};

/// A walk in the token-shifting graph; length is the cost measure of dist.
using ShiftSequence = std::vector<ShiftMove>;

ShiftSequence inverted(const ShiftSequence& s);  // reversed, directions flipped

/// A puzzle instance: the graph is implied by the distinguished cycles
/// (edges are consecutive pairs of each cycle).
struct Puzzle {
  int n = 0;
  std::vector<std::vector<int>> cycles;  // 1-based vertex labels

  int num_cycles() const { return static_cast<int>(cycles.size()); }

  /// Forward on (v1 ... vj) is the permutation (v1 v2 ... vj);
  /// Backward is its inverse. Tokens move against the cycle arrow on a
  /// Forward shift (new color at v is the old color at sigma(v)).
  Perm shift_perm(const ShiftMove& m) const;
  Perm shift_perm(int cycle_index, Direction dir) const;
};

/// Type-invariant check. Reports uncovered vertices, duplicate labels,
/// out-of-range labels, short cycles. Empty result = ok.
std::vector<std::string> validate(const Puzzle& p);

/// Map vertex -> color, colors 1-based.
struct TokenPlacement {
  std::vector<int> colors;

  int size() const { return static_cast<int>(colors.size()); }
  int at(int v) const { return colors[static_cast<size_t>(v) - 1]; }

  static TokenPlacement identity(int n);
  bool operator==(const TokenPlacement&) const = default;
};

/// New placement f' = f o sigma: the token at sigma(v) moves to v.
TokenPlacement apply_shift(const TokenPlacement& f, const Puzzle& p, const ShiftMove& m);
TokenPlacement apply_sequence(const TokenPlacement& f, const Puzzle& p, const ShiftSequence& s);
TokenPlacement apply_perm(const TokenPlacement& f, const Perm& sigma);

/// Equal color multiplicities; the necessary condition for reachability.
bool compatible(const TokenPlacement& f1, const TokenPlacement& f2);

/// JSON instance document, see README for the schema.
struct Instance {
  Puzzle puzzle;
  int colors = 0;
  TokenPlacement start;
  TokenPlacement target;
  std::optional<long long> budget;
};

std::string to_json_string(const Instance& inst);
Instance instance_from_json(const std::string& text);
Instance load_instance(const std::string& path);

std::string sequence_to_json(const ShiftSequence& s, const std::string& provenance);
ShiftSequence sequence_from_json(const std::string& text);

}  // namespace tokenshift
