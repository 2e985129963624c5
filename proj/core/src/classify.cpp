#include "tokenshift/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tokenshift {

namespace {

// Positions of the two shared labels must be cyclically adjacent.
bool adjacent_in_cycle(const std::vector<int>& cyc, int u, int v) {
  const int len = static_cast<int>(cyc.size());
  for (int i = 0; i < len; ++i) {
    int x = cyc[static_cast<size_t>(i)];
    int y = cyc[static_cast<size_t>((i + 1) % len)];
    if ((x == u && y == v) || (x == v && y == u)) return true;
  }
  return false;
}

std::vector<int> shared_vertices(const std::vector<int>& c1, const std::vector<int>& c2) {
  std::set<int> s1(c1.begin(), c1.end());
  std::vector<int> out;
  for (int v : c2)
    if (s1.count(v)) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

void require_valid(const Puzzle& p) {
  auto v = validate(p);
  if (!v.empty()) throw std::invalid_argument("invalid puzzle: " + v.front());
}

bool covers_all(const Puzzle& p, const std::vector<int>& subset) {
  std::vector<bool> cov(static_cast<size_t>(p.n), false);
  for (int ci : subset)
    for (int v : p.cycles[static_cast<size_t>(ci)]) cov[static_cast<size_t>(v) - 1] = true;
  return std::all_of(cov.begin(), cov.end(), [](bool b) { return b; });
}

bool connected_in(const InterconnectionGraph& g, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::set<int> in(subset.begin(), subset.end());
  std::vector<int> stack{subset.front()};
  std::set<int> seen{subset.front()};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : g.adjacent[static_cast<size_t>(x)]) {
      if (in.count(y) && !seen.count(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
    }
  }
  return seen.size() == in.size();
}

}  // namespace

bool properly_interconnected(const std::vector<int>& c1, const std::vector<int>& c2) {
  auto sh = shared_vertices(c1, c2);
  if (sh.size() == 1) return true;
  if (sh.size() == 2)
    return adjacent_in_cycle(c1, sh[0], sh[1]) && adjacent_in_cycle(c2, sh[0], sh[1]);
  return false;
}

const InterconnectionEdge* InterconnectionGraph::edge_between(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges)
    if (e.c1 == a && e.c2 == b) return &e;
  return nullptr;
}

InterconnectionGraph interconnection_graph(const Puzzle& p) {
  InterconnectionGraph g;
  g.num_nodes = p.num_cycles();
  g.adjacent.resize(static_cast<size_t>(g.num_nodes));
  for (int i = 0; i < g.num_nodes; ++i) {
    for (int j = i + 1; j < g.num_nodes; ++j) {
      const auto& ci = p.cycles[static_cast<size_t>(i)];
      const auto& cj = p.cycles[static_cast<size_t>(j)];
      auto sh = shared_vertices(ci, cj);
      InterconnectionEdge e;
      e.c1 = i;
      e.c2 = j;
      e.shared = sh;
      if (sh.size() == 1) {
        e.kind = ConnectionKind::OneVertex;
      } else if (sh.size() == 2 && adjacent_in_cycle(ci, sh[0], sh[1]) &&
                 adjacent_in_cycle(cj, sh[0], sh[1])) {
        e.kind = ConnectionKind::TwoAdjacent;
      } else {
        continue;
      }
      g.edges.push_back(e);
      g.adjacent[static_cast<size_t>(i)].push_back(j);
      g.adjacent[static_cast<size_t>(j)].push_back(i);
    }
  }
  return g;
}

std::optional<std::vector<int>> find_relevant_set(const Puzzle& p) {
  require_valid(p);
  const auto g = interconnection_graph(p);
  // connected components of the interconnection graph, by smallest index
  std::vector<int> comp(static_cast<size_t>(g.num_nodes), -1);
  int ncomp = 0;
  for (int s = 0; s < g.num_nodes; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.adjacent[static_cast<size_t>(x)]) {
        if (comp[static_cast<size_t>(y)] < 0) {
          comp[static_cast<size_t>(y)] = ncomp;
          stack.push_back(y);
        }
      }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> subset;
    for (int i = 0; i < g.num_nodes; ++i)
      if (comp[static_cast<size_t>(i)] == c) subset.push_back(i);
    if (subset.size() < 2 || !covers_all(p, subset)) continue;
    // greedy prune, ascending
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t k = 0; k < subset.size(); ++k) {
        std::vector<int> trial = subset;
        trial.erase(trial.begin() + static_cast<long>(k));
        if (trial.size() >= 2 && covers_all(p, trial) && connected_in(g, trial)) {
          subset = trial;
          changed = true;
          break;
        }
      }
    }
    return subset;
  }
  return std::nullopt;
}

std::string to_string(PuzzleFamily::Tag tag) {
  switch (tag) {
    case PuzzleFamily::Tag::OneConnected: return "one-connected";
    case PuzzleFamily::Tag::TwoConnected: return "two-connected";
    case PuzzleFamily::Tag::Generalized: return "generalized";
    case PuzzleFamily::Tag::Unrecognized: return "unrecognized";
  }
  return "?";
}

std::string to_string(GroupClass::Tag tag) {
  switch (tag) {
    case GroupClass::Tag::Symmetric: return "symmetric";
    case GroupClass::Tag::Alternating: return "alternating";
    case GroupClass::Tag::SpecialS5: return "special-s5";
    case GroupClass::Tag::Other: return "other";
  }
  return "?";
}

PuzzleFamily detect_family(const Puzzle& p) {
  require_valid(p);
  PuzzleFamily fam;
  if (p.num_cycles() == 2 && properly_interconnected(p.cycles[0], p.cycles[1])) {
    auto sh = shared_vertices(p.cycles[0], p.cycles[1]);
    fam.tag = sh.size() == 1 ? PuzzleFamily::Tag::OneConnected : PuzzleFamily::Tag::TwoConnected;
    fam.a = static_cast<int>(std::min(p.cycles[0].size(), p.cycles[1].size()));
    fam.b = static_cast<int>(std::max(p.cycles[0].size(), p.cycles[1].size()));
    return fam;
  }
  if (auto rel = find_relevant_set(p)) {
    fam.tag = PuzzleFamily::Tag::Generalized;
    fam.relevant = *rel;
    return fam;
  }
  fam.tag = PuzzleFamily::Tag::Unrecognized;
  return fam;
}

GroupClass classify(const Puzzle& p) {
  const PuzzleFamily fam = detect_family(p);
  GroupClass out;
  auto symmetric = [&] {
    out.tag = GroupClass::Tag::Symmetric;
    out.order = factorial(p.n);
  };
  auto alternating = [&] {
    out.tag = GroupClass::Tag::Alternating;
    out.order = factorial(p.n) / 2;
  };
  switch (fam.tag) {
    case PuzzleFamily::Tag::OneConnected:
      if (fam.a % 2 == 1 && fam.b % 2 == 1) alternating();
      else symmetric();
      return out;
    case PuzzleFamily::Tag::TwoConnected:
      if (fam.a == 4 && fam.b == 4) {
        out.tag = GroupClass::Tag::SpecialS5;
        out.order = 120;
      } else if (fam.a % 2 == 1 && fam.b % 2 == 1) {
        alternating();
      } else {
        symmetric();
      }
      return out;
    case PuzzleFamily::Tag::Generalized:
      if (p.n > 6) {
        // Every cycle of the set is a generator, relevant or not; one even
        // length anywhere makes the group symmetric.
        bool all_odd = true;
        for (const auto& c : p.cycles)
          if (c.size() % 2 == 0) all_odd = false;
        if (all_odd) alternating();
        else symmetric();
        return out;
      }
      break;  // small instances: fall through to the engine
    case PuzzleFamily::Tag::Unrecognized:
      break;
  }
  StrongGeneratingSet sgs(shift_generators(p));
  const BigInt ord = sgs.order();
  if (ord == factorial(p.n)) {
    out.tag = GroupClass::Tag::Symmetric;
  } else if (ord * 2 == factorial(p.n)) {
    out.tag = GroupClass::Tag::Alternating;
  } else {
    out.tag = GroupClass::Tag::Other;
  }
  out.order = ord;
  return out;
}

namespace {

// Images of the transpositions (1 i). Extending these multiplicatively
// under compose(p,q)(v) = p(q(v)) reproduces the worked 4-cycle images
// (2 5 3 6) and (1 3 5 2) and their product (1 6 2).
const Perm& psi_table(int i) {
  static const std::vector<Perm> table = [] {
    std::vector<Perm> t;
    t.push_back(Perm::from_cycles(6, {{1, 5}, {2, 3}, {4, 6}}));  // (1 2)
    t.push_back(Perm::from_cycles(6, {{1, 4}, {2, 5}, {3, 6}}));  // (1 3)
    t.push_back(Perm::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}}));  // (1 4)
    t.push_back(Perm::from_cycles(6, {{1, 3}, {2, 6}, {4, 5}}));  // (1 5)
    t.push_back(Perm::from_cycles(6, {{1, 6}, {2, 4}, {3, 5}}));  // (1 6)
    return t;
  }();
  return table[static_cast<size_t>(i) - 2];
}

// p as a product of transpositions (1 i), application order left to right:
// a cycle (c1 ... cj) is (c1 cj)(c1 c_{j-1})...(c1 c2), and
// (x y) = (1 x)(1 y)(1 x) when 1 is not involved.
std::vector<int> factor_into_1i(const Perm& p) {
  std::vector<int> out;
  for (const auto& cyc : p.cycle_decomposition()) {
    for (size_t k = cyc.size() - 1; k >= 1; --k) {
      const int x = cyc[0], y = cyc[k];
      if (x == 1) {
        out.push_back(y);
      } else if (y == 1) {
        out.push_back(x);
      } else {
        out.push_back(x);
        out.push_back(y);
        out.push_back(x);
      }
    }
  }
  return out;
}

}  // namespace

Perm psi_image(const Perm& p) {
  if (p.degree() != 6) throw std::invalid_argument("psi_image requires degree 6");
  Perm acc(6);
  for (int i : factor_into_1i(p)) acc = acc * psi_table(i);
  return acc;
}

bool special44_member(const Perm& p) {
  return psi_image(p)(4) == 4;
}

}  // namespace tokenshift
