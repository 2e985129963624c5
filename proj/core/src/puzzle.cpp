#include "tokenshift/puzzle.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tokenshift {

using ordered_json = nlohmann::ordered_json;

ShiftSequence inverted(const ShiftSequence& s) {
  ShiftSequence out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    out.push_back({it->cycle, flip(it->dir)});
  return out;
}

Perm Puzzle::shift_perm(const ShiftMove& m) const { return shift_perm(m.cycle, m.dir); }

Perm Puzzle::shift_perm(int cycle_index, Direction dir) const {
  if (cycle_index < 0 || cycle_index >= num_cycles())
    throw std::invalid_argument("cycle index out of range");
  Perm fwd = Perm::from_cycles(n, {cycles[static_cast<size_t>(cycle_index)]});
  return dir == Direction::Forward ? fwd : fwd.inverse();
}

std::vector<std::string> validate(const Puzzle& p) {
  std::vector<std::string> out;
  if (p.n < 1) out.push_back("vertex count must be positive");
  if (p.cycles.empty()) out.push_back("no cycles");
  std::vector<bool> covered(p.n > 0 ? static_cast<size_t>(p.n) : 0, false);
  for (int ci = 0; ci < p.num_cycles(); ++ci) {
    const auto& cyc = p.cycles[static_cast<size_t>(ci)];
    std::ostringstream tag;
    tag << "cycle " << ci;
    if (cyc.size() < 2) out.push_back(tag.str() + ": fewer than 2 vertices");
    std::set<int> seen;
    for (int v : cyc) {
      if (v < 1 || v > p.n) {
        out.push_back(tag.str() + ": vertex " + std::to_string(v) + " out of range");
        continue;
      }
      if (!seen.insert(v).second)
        out.push_back(tag.str() + ": duplicate vertex " + std::to_string(v));
      covered[static_cast<size_t>(v) - 1] = true;
    }
  }
  std::string uncovered;
  for (int v = 1; v <= p.n; ++v) {
    if (!covered.empty() && !covered[static_cast<size_t>(v) - 1]) {
      if (!uncovered.empty()) uncovered += ",";
      uncovered += std::to_string(v);
    }
  }
  if (!uncovered.empty()) out.push_back("vertices " + uncovered + " uncovered by any cycle");
  return out;
}

TokenPlacement TokenPlacement::identity(int n) {
  TokenPlacement f;
  f.colors.resize(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) f.colors[static_cast<size_t>(v) - 1] = v;
  return f;
}

TokenPlacement apply_perm(const TokenPlacement& f, const Perm& sigma) {
  if (f.size() != sigma.degree()) throw std::invalid_argument("placement/permutation size mismatch");
  TokenPlacement out;
  out.colors.resize(f.colors.size());
  for (int v = 1; v <= f.size(); ++v)
    out.colors[static_cast<size_t>(v) - 1] = f.at(sigma(v));
  return out;
}

TokenPlacement apply_shift(const TokenPlacement& f, const Puzzle& p, const ShiftMove& m) {
  if (f.size() != p.n) throw std::invalid_argument("placement size mismatch");
  // Inline f o sigma for a single cycle; avoids building a full Perm.
  const auto& cyc = p.cycles.at(static_cast<size_t>(m.cycle));
  TokenPlacement out = f;
  const size_t j = cyc.size();
  if (m.dir == Direction::Forward) {
    // sigma(v_i) = v_{i+1}: new color at v_i is old color at v_{i+1}.
    for (size_t i = 0; i < j; ++i)
      out.colors[static_cast<size_t>(cyc[i]) - 1] = f.at(cyc[(i + 1) % j]);
  } else {
    for (size_t i = 0; i < j; ++i)
      out.colors[static_cast<size_t>(cyc[i]) - 1] = f.at(cyc[(i + j - 1) % j]);
  }
  return out;
}

TokenPlacement apply_sequence(const TokenPlacement& f, const Puzzle& p, const ShiftSequence& s) {
  TokenPlacement cur = f;
  for (const auto& m : s) cur = apply_shift(cur, p, m);
  return cur;
}

bool compatible(const TokenPlacement& f1, const TokenPlacement& f2) {
  if (f1.size() != f2.size()) throw std::invalid_argument("placement size mismatch");
  std::vector<int> a = f1.colors, b = f2.colors;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

TokenPlacement placement_from_json(const ordered_json& j, int n, int colors, const char* key) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument(std::string(key) + " must be an array of length n");
  TokenPlacement f;
  for (const auto& x : j) {
    int c = x.get<int>();
    if (c < 1 || c > colors)
      throw std::invalid_argument(std::string(key) + " color out of range 1..colors");
    f.colors.push_back(c);
  }
  return f;
}

}  // namespace

std::string to_json_string(const Instance& inst) {
  ordered_json j;
  j["n"] = inst.puzzle.n;
  j["cycles"] = inst.puzzle.cycles;
  j["colors"] = inst.colors;
  j["start"] = inst.start.colors;
  j["target"] = inst.target.colors;
  if (inst.budget) j["budget"] = *inst.budget;
  else j["budget"] = nullptr;
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("instance JSON parse error: ") + e.what());
  }
  Instance inst;
  inst.puzzle.n = j.at("n").get<int>();
  inst.puzzle.cycles = j.at("cycles").get<std::vector<std::vector<int>>>();
  inst.colors = j.at("colors").get<int>();
  inst.start = placement_from_json(j.at("start"), inst.puzzle.n, inst.colors, "start");
  inst.target = placement_from_json(j.at("target"), inst.puzzle.n, inst.colors, "target");
  if (j.contains("budget") && !j.at("budget").is_null())
    inst.budget = j.at("budget").get<long long>();
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

std::string sequence_to_json(const ShiftSequence& s, const std::string& provenance) {
  ordered_json j;
  j["length"] = s.size();
  ordered_json moves = ordered_json::array();
  for (const auto& m : s) {
    ordered_json jm;
    jm["cycle"] = m.cycle;
    jm["dir"] = m.dir == Direction::Forward ? "F" : "B";
    moves.push_back(jm);
  }
  j["moves"] = moves;
  j["provenance"] = provenance;
  return j.dump(2) + "\n";
}

ShiftSequence sequence_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("sequence JSON parse error: ") + e.what());
  }
  const auto& moves = j.is_array() ? j : j.at("moves");
  ShiftSequence s;
  for (const auto& jm : moves) {
    ShiftMove m;
    m.cycle = jm.at("cycle").get<int>();
    std::string d = jm.at("dir").get<std::string>();
    if (d == "F") m.dir = Direction::Forward;
    else if (d == "B") m.dir = Direction::Backward;
    else throw std::invalid_argument("move dir must be \"F\" or \"B\"");
    s.push_back(m);
  }
  return s;
}

}  // namespace tokenshift
