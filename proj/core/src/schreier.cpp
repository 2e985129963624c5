#include "tokenshift/schreier.hpp"

#include <stdexcept>

namespace tokenshift {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

StrongGeneratingSet::StrongGeneratingSet(const std::vector<Perm>& generators) {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  degree_ = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  for (const auto& g : generators) add_generator(g, 0);
}

void StrongGeneratingSet::rebuild_orbit(Level& lvl) {
  lvl.orbit.clear();
  lvl.transversal.clear();
  lvl.orbit.push_back(lvl.base_point);
  lvl.transversal.emplace(lvl.base_point, Perm(degree_));
  for (size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
    const int x = lvl.orbit[qi];
    const Perm tx = lvl.transversal.at(x);
    for (const auto& s : lvl.gens) {
      const int y = s(x);
      if (!lvl.transversal.count(y)) {
        lvl.orbit.push_back(y);
        lvl.transversal.emplace(y, s * tx);
      }
    }
  }
}

void StrongGeneratingSet::add_generator(const Perm& g, size_t level) {
  // Sift g through the existing chain starting at `level`.
  Perm h = g;
  size_t lvl = level;
  while (lvl < levels_.size()) {
    const Level& L = levels_[lvl];
    const int x = h(L.base_point);
    auto it = L.transversal.find(x);
    if (it == L.transversal.end()) break;
    h = it->second.inverse() * h;
    ++lvl;
  }
  if (h.is_identity()) return;

  if (lvl == levels_.size()) {
    Level fresh;
    for (int v = 1; v <= degree_; ++v) {
      if (h(v) != v) {
        fresh.base_point = v;
        break;
      }
    }
    levels_.push_back(std::move(fresh));
    base_.push_back(levels_.back().base_point);
  }

  Level& L = levels_[lvl];
  L.gens.push_back(h);
  rebuild_orbit(L);

  // All Schreier generators of the enlarged level must sift below it.
  for (int x : L.orbit) {
    const Perm& tx = L.transversal.at(x);
    for (const auto& s : L.gens) {
      const Perm sg = L.transversal.at(s(x)).inverse() * s * tx;
      if (!sg.is_identity()) add_generator(sg, lvl + 1);
    }
  }
}

BigInt StrongGeneratingSet::order() const {
  BigInt r = 1;
  for (const auto& L : levels_) r *= static_cast<long>(L.orbit.size());
  return r;
}

bool StrongGeneratingSet::contains(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
  Perm h = p;
  for (const auto& L : levels_) {
    const int x = h(L.base_point);
    auto it = L.transversal.find(x);
    if (it == L.transversal.end()) return false;
    h = it->second.inverse() * h;
  }
  return h.is_identity();
}

std::vector<Perm> shift_generators(const Puzzle& p) {
  std::vector<Perm> gens;
  gens.reserve(p.cycles.size());
  for (int ci = 0; ci < p.num_cycles(); ++ci)
    gens.push_back(p.shift_perm(ci, Direction::Forward));
  return gens;
}

BigInt component_count(const Puzzle& p) {
  StrongGeneratingSet sgs(shift_generators(p));
  return factorial(p.n) / sgs.order();
}

}  // namespace tokenshift
