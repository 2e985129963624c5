#include "tokenshift/bfs.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

namespace tokenshift {

namespace {

inline ShiftMove decode_move(int mi) {
  return {mi / 2, (mi % 2) ? Direction::Backward : Direction::Forward};
}
inline int invert_move_index(int mi) { return mi ^ 1; }

struct MaskCodec {
  using Key = std::uint64_t;
  std::vector<std::vector<int>> cyc;  // 0-based bit positions
  std::vector<Key> cycmask;

  static bool applicable(const Puzzle& p, const TokenPlacement& f) {
    if (p.n > 64) return false;
    return std::all_of(f.colors.begin(), f.colors.end(), [](int c) { return c == 1 || c == 2; });
  }

  explicit MaskCodec(const Puzzle& p) {
    for (const auto& c : p.cycles) {
      std::vector<int> z;
      Key m = 0;
      for (int v : c) {
        z.push_back(v - 1);
        m |= Key{1} << (v - 1);
      }
      cyc.push_back(std::move(z));
      cycmask.push_back(m);
    }
  }

  Key encode(const TokenPlacement& f) const {
    Key k = 0;
    for (size_t i = 0; i < f.colors.size(); ++i)
      if (f.colors[i] == 2) k |= Key{1} << i;
    return k;
  }

  int num_moves() const { return static_cast<int>(cyc.size()) * 2; }

  Key apply(Key k, int mi) const {
    const auto& c = cyc[static_cast<size_t>(mi / 2)];
    const Key m = cycmask[static_cast<size_t>(mi / 2)];
    const Key sub = k & m;
    if (sub == 0 || sub == m) return k;  // monochromatic: self-loop
    const size_t len = c.size();
    Key out = k & ~m;
    if (mi % 2 == 0) {  // Forward: new bit at c[i] = old bit at c[i+1]
      for (size_t i = 0; i < len; ++i)
        out |= ((k >> c[(i + 1) % len]) & 1) << c[i];
    } else {
      for (size_t i = 0; i < len; ++i)
        out |= ((k >> c[(i + len - 1) % len]) & 1) << c[i];
    }
    return out;
  }
};

struct VecCodec {
  using Key = std::string;
  const Puzzle* p;

  explicit VecCodec(const Puzzle& puz) : p(&puz) {}

  Key encode(const TokenPlacement& f) const {
    Key k(f.colors.size(), '\0');
    for (size_t i = 0; i < f.colors.size(); ++i) k[i] = static_cast<char>(f.colors[i]);
    return k;
  }

  int num_moves() const { return p->num_cycles() * 2; }

  Key apply(const Key& k, int mi) const {
    const auto& c = p->cycles[static_cast<size_t>(mi / 2)];
    const size_t len = c.size();
    bool mono = true;
    for (size_t i = 1; i < len && mono; ++i)
      mono = k[static_cast<size_t>(c[i]) - 1] == k[static_cast<size_t>(c[0]) - 1];
    if (mono) return k;
    Key out = k;
    if (mi % 2 == 0) {
      for (size_t i = 0; i < len; ++i)
        out[static_cast<size_t>(c[i]) - 1] = k[static_cast<size_t>(c[(i + 1) % len]) - 1];
    } else {
      for (size_t i = 0; i < len; ++i)
        out[static_cast<size_t>(c[i]) - 1] = k[static_cast<size_t>(c[(i + len - 1) % len]) - 1];
    }
    return out;
  }
};

struct EngineOut {
  std::optional<long long> dist;
  ShiftSequence witness;
  std::uint64_t explored = 0;
  bool exhausted = false;  // a component was fully enumerated without a hit
};

template <class Codec>
EngineOut run_search(const Codec& cod, typename Codec::Key start, typename Codec::Key goal,
                     long long depth_budget, const SearchLimits& limits, bool bidirectional) {
  using Key = typename Codec::Key;
  struct Node {
    Key parent{};
    std::int32_t depth = 0;
    std::int16_t move = -1;
  };
  std::unordered_map<Key, Node> side[2];
  std::vector<Key> frontier[2];
  long long depth_done[2] = {0, 0};

  EngineOut out;
  if (start == goal) {
    out.dist = 0;
    out.explored = 1;
    return out;
  }
  side[0].emplace(start, Node{});
  side[1].emplace(goal, Node{});
  frontier[0].push_back(start);
  frontier[1].push_back(goal);

  long long best = -1;
  Key meet{};

  auto reconstruct = [&]() {
    ShiftSequence seq;
    // start -> meet
    {
      std::vector<int> moves;
      Key x = meet;
      while (true) {
        const Node& nd = side[0].at(x);
        if (nd.move < 0) break;
        moves.push_back(nd.move);
        x = nd.parent;
      }
      for (auto it = moves.rbegin(); it != moves.rend(); ++it) seq.push_back(decode_move(*it));
    }
    // meet -> goal: invert the goal-side discovery chain
    {
      Key x = meet;
      while (true) {
        const Node& nd = side[1].at(x);
        if (nd.move < 0) break;
        seq.push_back(decode_move(invert_move_index(nd.move)));
        x = nd.parent;
      }
    }
    return seq;
  };

  const int nm = cod.num_moves();
  while (true) {
    if (best >= 0 && best <= depth_done[0] + depth_done[1] + 1) break;
    if (depth_done[0] + depth_done[1] + 1 > depth_budget) break;
    int s;
    if (!bidirectional) {
      s = 0;
      if (frontier[0].empty()) break;
    } else {
      if (frontier[0].empty() || frontier[1].empty()) break;
      s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    }
    const int o = 1 - s;
    std::vector<Key> next;
    for (const Key& x : frontier[s]) {
      for (int mi = 0; mi < nm; ++mi) {
        Key y = cod.apply(x, mi);
        if (y == x) continue;
        auto [it, fresh] = side[s].try_emplace(
            y, Node{x, static_cast<std::int32_t>(depth_done[s] + 1), static_cast<std::int16_t>(mi)});
        if (!fresh) continue;
        if (side[0].size() + side[1].size() > limits.state_cap)
          throw CapExceeded("state cap exceeded during search");
        next.push_back(y);
        auto hit = side[o].find(y);
        if (hit != side[o].end()) {
          const long long cand = (depth_done[s] + 1) + hit->second.depth;
          if (best < 0 || cand < best) {
            best = cand;
            meet = y;
          }
        }
      }
    }
    frontier[s] = std::move(next);
    ++depth_done[s];
    if (frontier[s].empty() && best < 0) {
      out.exhausted = true;
      break;
    }
  }

  out.explored = side[0].size() + side[1].size();
  if (best >= 0 && best <= depth_budget) {
    out.dist = best;
    out.witness = reconstruct();
  } else if (best < 0 && (frontier[0].empty() || (bidirectional && frontier[1].empty()))) {
    out.exhausted = true;
  }
  return out;
}

template <class Codec>
EngineOut dispatch_search(const Puzzle& p, const TokenPlacement& f0, const TokenPlacement& ft,
                          long long depth_budget, const SearchLimits& limits, bool bidirectional) {
  Codec cod(p);
  return run_search(cod, cod.encode(f0), cod.encode(ft), depth_budget, limits, bidirectional);
}

EngineOut search(const Puzzle& p, const TokenPlacement& f0, const TokenPlacement& ft,
                 long long depth_budget, const SearchLimits& limits, bool bidirectional) {
  if (MaskCodec::applicable(p, f0))
    return dispatch_search<MaskCodec>(p, f0, ft, depth_budget, limits, bidirectional);
  return dispatch_search<VecCodec>(p, f0, ft, depth_budget, limits, bidirectional);
}

}  // namespace

SearchResult bfs_distance(const Puzzle& p, const TokenPlacement& f0, const TokenPlacement& ft,
                          const SearchLimits& limits, bool bidirectional) {
  if (f0.size() != p.n || ft.size() != p.n)
    throw std::invalid_argument("placement size does not match puzzle");
  if (!compatible(f0, ft)) throw IncompatiblePlacements("placements have different color multisets");
  EngineOut eo = search(p, f0, ft, limits.depth_cap, limits, bidirectional);
  SearchResult r;
  r.explored = eo.explored;
  if (eo.dist) {
    r.distance = eo.dist;
    r.witness = std::move(eo.witness);
  } else if (!eo.exhausted) {
    throw CapExceeded("depth cap exceeded before the component was exhausted");
  }
  return r;
}

std::uint64_t component_size(const Puzzle& p, const TokenPlacement& f0,
                             const SearchLimits& limits) {
  if (f0.size() != p.n) throw std::invalid_argument("placement size does not match puzzle");
  auto flood = [&](auto codec) -> std::uint64_t {
    using Key = typename decltype(codec)::Key;
    std::unordered_map<Key, char> seen;
    std::vector<Key> stack{codec.encode(f0)};
    seen.emplace(stack.back(), 1);
    const int nm = codec.num_moves();
    while (!stack.empty()) {
      Key x = stack.back();
      stack.pop_back();
      for (int mi = 0; mi < nm; ++mi) {
        Key y = codec.apply(x, mi);
        if (y == x) continue;
        if (seen.try_emplace(y, 1).second) {
          if (seen.size() > limits.state_cap) throw CapExceeded("state cap exceeded");
          stack.push_back(y);
        }
      }
    }
    return seen.size();
  };
  if (MaskCodec::applicable(p, f0)) return flood(MaskCodec(p));
  return flood(VecCodec(p));
}

BudgetAnswer decide_budget(const Puzzle& p, const TokenPlacement& f0, const TokenPlacement& ft,
                           long long ell, const SearchLimits& limits) {
  if (ell < 0) throw std::invalid_argument("budget must be nonnegative");
  if (f0.size() != p.n || ft.size() != p.n)
    throw std::invalid_argument("placement size does not match puzzle");
  if (!compatible(f0, ft)) return BudgetAnswer::No;
  EngineOut eo = search(p, f0, ft, ell, limits, /*bidirectional=*/true);
  return eo.dist && *eo.dist <= ell ? BudgetAnswer::Yes : BudgetAnswer::No;
}

}  // namespace tokenshift
