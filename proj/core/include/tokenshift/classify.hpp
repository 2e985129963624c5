#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tokenshift/perm.hpp"
#include "tokenshift/puzzle.hpp"
#include "tokenshift/schreier.hpp"

namespace tokenshift {

enum class ConnectionKind { OneVertex, TwoAdjacent };

struct InterconnectionEdge {
  int c1 = 0, c2 = 0;          // cycle indices, c1 < c2
  ConnectionKind kind = ConnectionKind::OneVertex;
  std::vector<int> shared;     // 1 or 2 vertex labels
};

/// Nodes are cycle indices; an edge exists iff the cycles are properly
/// interconnected: they share exactly one vertex, or exactly two vertices
/// that are consecutive in both cycles (cyclically, either orientation).
struct InterconnectionGraph {
  int num_nodes = 0;
  std::vector<InterconnectionEdge> edges;
  std::vector<std::vector<int>> adjacent;  // per node, sorted neighbor list

  const InterconnectionEdge* edge_between(int a, int b) const;
};

InterconnectionGraph interconnection_graph(const Puzzle& p);

bool properly_interconnected(const std::vector<int>& c1, const std::vector<int>& c2);

struct PuzzleFamily {
  enum class Tag { OneConnected, TwoConnected, Generalized, Unrecognized };
  Tag tag = Tag::Unrecognized;
  int a = 0, b = 0;           // two-cycle families, a <= b
  std::vector<int> relevant;  // Generalized: a valid relevant subset
};

std::string to_string(PuzzleFamily::Tag tag);

/// Exact two-cycle families when |C| = 2 and the pair is properly
/// interconnected; otherwise Generalized with a relevant subset when one
/// exists, else Unrecognized. Throws on invalid puzzles.
PuzzleFamily detect_family(const Puzzle& p);

/// A relevant subset: >= 2 cycles, connected in the interconnection graph,
/// covering every vertex. Grown from a connected component, then greedily
/// pruned in ascending index order while the conditions hold.
std::optional<std::vector<int>> find_relevant_set(const Puzzle& p);

struct GroupClass {
  enum class Tag { Symmetric, Alternating, SpecialS5, Other };
  Tag tag = Tag::Other;
  BigInt order = 0;

  bool operator==(const GroupClass&) const = default;
};

std::string to_string(GroupClass::Tag tag);

/// Configuration-group classification. Recognized families are classified
/// by cycle-length parity (all lengths odd => Alternating, else Symmetric;
/// the standalone two-cycle (4,4) case => SpecialS5). Generalized families
/// with n <= 6 and unrecognized puzzles fall back to the group engine.
GroupClass classify(const Puzzle& p);

/// The exceptional outer automorphism of S6, stored as the images of the
/// transpositions (1 i); all other values are derived by factorization.
Perm psi_image(const Perm& p);

/// True iff psi_image(p) leaves token 4 in place; membership test for the
/// two-cycle 2-connected (4,4) configuration group.
bool special44_member(const Perm& p);

}  // namespace tokenshift
