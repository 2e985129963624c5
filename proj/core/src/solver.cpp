#include "tokenshift/solver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "tokenshift/bfs.hpp"

namespace tokenshift {

namespace {

constexpr int kAlpha = 0;
constexpr int kBeta = 1;

std::vector<int> rotate_to(const std::vector<int>& cyc, int v) {
  auto it = std::find(cyc.begin(), cyc.end(), v);
  if (it == cyc.end()) throw std::logic_error("rotate_to: vertex not in cycle");
  std::vector<int> out(it, cyc.end());
  out.insert(out.end(), cyc.begin(), it);
  return out;
}

std::vector<int> reversed_cycle(const std::vector<int>& cyc) {
  std::vector<int> out;
  out.push_back(cyc.front());
  out.insert(out.end(), cyc.rbegin(), cyc.rend() - 1);
  return out;
}

std::vector<int> sorted_shared(const std::vector<int>& c1, const std::vector<int>& c2) {
  std::set<int> s1(c1.begin(), c1.end());
  std::vector<int> out;
  for (int v : c2)
    if (s1.count(v)) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool cycle_has_arc(const std::vector<int>& cyc, int u, int v) {
  const size_t len = cyc.size();
  for (size_t i = 0; i < len; ++i)
    if (cyc[i] == u && cyc[(i + 1) % len] == v) return true;
  return false;
}

Perm key_to_perm(const std::string& k) {
  std::vector<int> img(k.size());
  for (size_t i = 0; i < k.size(); ++i) img[i] = static_cast<int>(k[i]);
  return Perm::from_one_line(std::move(img));
}

std::string perm_key(const Perm& p) {
  std::string k(static_cast<size_t>(p.degree()), '\0');
  for (int v = 1; v <= p.degree(); ++v) k[static_cast<size_t>(v) - 1] = static_cast<char>(p(v));
  return k;
}

// Breadth-first word search in a small permutation group. `letters` pairs an
// abstract letter with its value; the first word whose product satisfies
// `accept` is returned (shortest, deterministic tie-break by letter order).
std::optional<GeneratorWord> group_bfs_find(const std::vector<std::pair<Letter, Perm>>& letters,
                                            int degree, const std::function<bool(const Perm&)>& accept,
                                            size_t state_limit = 200000) {
  Perm id(degree);
  if (accept(id)) return GeneratorWord{};
  std::unordered_map<std::string, std::pair<std::string, size_t>> parent;  // key -> (parent key, letter idx)
  std::deque<std::string> queue;
  const std::string root = perm_key(id);
  parent.emplace(root, std::make_pair(std::string(), letters.size()));
  queue.push_back(root);
  while (!queue.empty()) {
    std::string xk = queue.front();
    queue.pop_front();
    const Perm x = key_to_perm(xk);
    for (size_t li = 0; li < letters.size(); ++li) {
      const auto& [letter, value] = letters[li];
      const Perm y = x * (letter.exp >= 0 ? value : value.inverse());
      std::string yk = perm_key(y);
      if (parent.count(yk)) continue;
      parent.emplace(yk, std::make_pair(xk, li));
      if (accept(y)) {
        GeneratorWord w;
        std::vector<size_t> rev;
        std::string cur = yk;
        while (cur != root) {
          auto& pr = parent.at(cur);
          rev.push_back(pr.second);
          cur = pr.first;
        }
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) w.letters.push_back(letters[*it].first);
        return w;
      }
      if (parent.size() > state_limit) throw std::runtime_error("group word search exploded");
      queue.push_back(yk);
    }
  }
  return std::nullopt;
}

// --- canonical two-cycle machinery ---------------------------------------

GeneratorWord substitute(const GeneratorWord& w, const std::vector<GeneratorWord>& images) {
  GeneratorWord out;
  for (const auto& l : w.letters) {
    const GeneratorWord& img = images.at(static_cast<size_t>(l.gen));
    if (l.exp >= 0) out.push_word(img);
    else out.push_inverse(img);
  }
  return out;
}

GeneratorWord letters_of(std::initializer_list<Letter> ls) {
  GeneratorWord w;
  for (const auto& l : ls) w.letters.push_back(l);
  return w;
}

// rho = alpha * beta (1-connected) and the basic derived words.
const GeneratorWord kWordAB = letters_of({{kAlpha, 1}, {kBeta, 1}});
// commutator beta alpha^-1 beta^-1 alpha = (a-1 a a+1)
const GeneratorWord kWordCommutator = letters_of({{kBeta, 1}, {kAlpha, -1}, {kBeta, -1}, {kAlpha, 1}});
// gamma1 = alpha^-1 beta, the (m-1)-cycle missing a-1 (2-connected)
const GeneratorWord kWordGamma1 = letters_of({{kAlpha, -1}, {kBeta, 1}});
// conjugated 3-cycle gamma1 alpha^-1 gamma1^-1 = (2 3 4) in a (3,b)-puzzle
const GeneratorWord kWord3bCycle =
    letters_of({{kAlpha, -1}, {kBeta, 1}, {kAlpha, -1}, {kBeta, -1}, {kAlpha, 1}});

Perm rotation_power(int m, int k) {
  // v -> v + k (mod m), 1-based
  std::vector<int> img(static_cast<size_t>(m));
  for (int v = 1; v <= m; ++v)
    img[static_cast<size_t>(v) - 1] = (v - 1 + (k % m) + m) % m + 1;
  return Perm::from_one_line(std::move(img));
}

Perm conj(const Perm& g, const Perm& phi) {  // phi g phi^-1
  return phi * g * phi.inverse();
}

Perm restrict_to(const Perm& g, int m, const char* what) {
  for (int v = m + 1; v <= g.degree(); ++v)
    if (g(v) != v) throw NotInGroup(std::string(what) + ": target moves a vertex outside the support");
  std::vector<int> img(static_cast<size_t>(m));
  for (int v = 1; v <= m; ++v) img[static_cast<size_t>(v) - 1] = g(v);
  return Perm::from_one_line(std::move(img));
}

std::vector<int> iota_cycle(int from, int to) {
  std::vector<int> out;
  for (int v = from; v <= to; ++v) out.push_back(v);
  return out;
}

Perm canonical_alpha(int a, int m) { return Perm::from_cycles(m, {iota_cycle(1, a)}); }

Perm canonical_beta_1conn(int a, int m) { return Perm::from_cycles(m, {iota_cycle(a, m)}); }

Perm canonical_beta_2conn(int a, int m) { return Perm::from_cycles(m, {iota_cycle(a - 1, m)}); }

GeneratorWord even_word_1conn(int a, int m, const Perm& target);
GeneratorWord even_word_3b(int m, const Perm& target);
GeneratorWord even_word_tau_route(int a, int m, const Perm& target);
GeneratorWord word_44_bfs(const Perm& target);

GeneratorWord canonical_word_1conn(int a, int b, int m, const Perm& target) {
  if (target.is_even()) return even_word_1conn(a, m, target);
  if (a % 2 == 0) {
    GeneratorWord w = even_word_1conn(a, m, target * canonical_alpha(a, m));
    w.push(kAlpha, -1);
    return w;
  }
  if (b % 2 == 0) {
    GeneratorWord w = even_word_1conn(a, m, target * canonical_beta_1conn(a, m));
    w.push(kBeta, -1);
    return w;
  }
  throw NotInGroup("odd target in an alternating two-cycle puzzle");
}

GeneratorWord canonical_word_2conn(int a, int b, int m, const Perm& target) {
  if (a == 2) {
    // beta = (1 2 ... m) is the rotation and alpha the transposition
    return substitute(word_sn_bubble(m, target),
                      {letters_of({{kBeta, 1}}), letters_of({{kAlpha, 1}})});
  }
  if (a == 4 && b == 4) return word_44_bfs(target);
  auto even_part = [&](const Perm& t) {
    return a == 3 ? even_word_3b(m, t) : even_word_tau_route(a, m, t);
  };
  if (target.is_even()) return even_part(target);
  if (a % 2 == 0) {
    GeneratorWord w = even_part(target * canonical_alpha(a, m));
    w.push(kAlpha, -1);
    return w;
  }
  if (b % 2 == 0) {
    GeneratorWord w = even_part(target * canonical_beta_2conn(a, m));
    w.push(kBeta, -1);
    return w;
  }
  throw NotInGroup("odd target in an alternating two-cycle puzzle");
}

// 1-connected even case: generate with the m-cycle alpha*beta and the
// commutator 3-cycle, rotated so the 3-cycle sits at (1 2 3).
GeneratorWord even_word_1conn(int a, int m, const Perm& target) {
  if (target.is_identity()) return {};
  const Perm phi = rotation_power(m, -(a - 2));
  const Perm relabeled = conj(target, phi);
  const GeneratorWord w = word_an_ncycle_3cycle(m, relabeled);
  return substitute(w, {kWordAB, kWordCommutator});
}

// 2-connected (3,b) even case. Moves the correct token to vertex 1, fixes
// parity with an extra beta shift when needed, then generates the remaining
// even permutation of {2..m} with beta and the (2 3 4) 3-cycle.
GeneratorWord even_word_3b(int m, const Perm& target) {
  if (target.is_identity()) return {};
  const Perm alpha = canonical_alpha(3, m);
  const Perm beta = canonical_beta_2conn(3, m);
  GeneratorWord w;
  Perm sigma(m);
  const int t = target(1);
  if (t != 1) {
    for (int k = 0; k < t - 2; ++k) w.push(kBeta, 1);
    w.push(kAlpha, 1);
    sigma = beta.power(t - 2) * alpha;
  }
  if (!sigma.is_even()) {
    w.push(kBeta, 1);
    sigma = sigma * beta;
  }
  const Perm rest = sigma.inverse() * target;  // fixes vertex 1, even
  if (!rest.is_identity()) {
    // relabel {2..m} down to {1..m-1}
    std::vector<int> img(static_cast<size_t>(m));
    img[0] = m;
    for (int v = 2; v <= m; ++v) img[static_cast<size_t>(v) - 1] = v - 1;
    const Perm phi = Perm::from_one_line(std::move(img));
    const Perm small = restrict_to(conj(rest, phi), m - 1, "3b remainder");
    const GeneratorWord inner = word_an_ncycle_3cycle(m - 1, small);
    w.push_word(substitute(inner, {letters_of({{kBeta, 1}}), kWord3bCycle}));
  }
  return w;
}

// 2-connected a >= 4, b >= 5: builds the constant-size 3-cycle
// tau = alpha (delta1 delta2)^2 alpha^-1 = (1 2 a-1) and recurses on the
// 2-connected (3, m-1)-puzzle induced by tau and gamma1.
GeneratorWord even_word_tau_route(int a, int m, const Perm& target) {
  if (target.is_identity()) return {};
  const GeneratorWord g1inv = letters_of({{kBeta, -1}, {kAlpha, 1}});
  GeneratorWord d1;  // gamma1^-1 beta gamma1
  d1.push_word(g1inv);
  d1.push(kBeta, 1);
  d1.push_word(kWordGamma1);
  GeneratorWord d2;  // gamma2^-1 beta^-1 gamma2, gamma2 = alpha beta^-1
  d2.push_word(letters_of({{kBeta, 1}, {kAlpha, -1}}));
  d2.push(kBeta, -1);
  d2.push_word(letters_of({{kAlpha, 1}, {kBeta, -1}}));
  GeneratorWord tau;
  tau.push(kAlpha, 1);
  tau.push_word(d1);
  tau.push_word(d2);
  tau.push_word(d1);
  tau.push_word(d2);
  tau.push(kAlpha, -1);

  // Relabeling onto the canonical (3, m-1)-puzzle: tau = (1 2 a-1) becomes
  // (1 2 3) and gamma1 reversed becomes (2 3 ... m).
  std::vector<int> img(static_cast<size_t>(m));
  for (int v = 1; v <= a - 2; ++v) img[static_cast<size_t>(v) - 1] = v + 1;
  img[static_cast<size_t>(a - 1) - 1] = 1;
  for (int v = a; v <= m; ++v) img[static_cast<size_t>(v) - 1] = a + (m - v);
  const Perm phi = Perm::from_one_line(std::move(img));
  const Perm relabeled = conj(target, phi);
  const GeneratorWord inner = canonical_word_2conn(3, m - 1, m, relabeled);
  return substitute(inner, {tau, g1inv});
}

// The standalone (4,4) case: exhaustive word table over the 120-element
// configuration group.
GeneratorWord word_44_bfs(const Perm& target) {
  if (!special44_member(target)) throw NotInGroup("not in the (4,4) configuration group");
  static const std::unordered_map<std::string, GeneratorWord> table = [] {
    const Perm alpha = Perm::from_cycles(6, {{1, 2, 3, 4}});
    const Perm beta = Perm::from_cycles(6, {{3, 4, 5, 6}});
    const std::vector<std::pair<Letter, Perm>> letters = {
        {{kAlpha, 1}, alpha}, {{kAlpha, -1}, alpha}, {{kBeta, 1}, beta}, {{kBeta, -1}, beta}};
    std::unordered_map<std::string, GeneratorWord> t;
    std::deque<std::string> queue;
    t.emplace(perm_key(Perm(6)), GeneratorWord{});
    queue.push_back(perm_key(Perm(6)));
    while (!queue.empty()) {
      std::string xk = queue.front();
      queue.pop_front();
      const Perm x = key_to_perm(xk);
      const GeneratorWord wx = t.at(xk);
      for (const auto& [letter, value] : letters) {
        const Perm y = x * (letter.exp >= 0 ? value : value.inverse());
        std::string yk = perm_key(y);
        if (t.count(yk)) continue;
        GeneratorWord wy = wx;
        wy.letters.push_back(letter);
        t.emplace(std::move(yk), std::move(wy));
        queue.push_back(perm_key(y));
      }
    }
    return t;
  }();
  auto it = table.find(perm_key(target));
  if (it == table.end()) throw NotInGroup("not reached in the (4,4) group table");
  return it->second;
}

}  // namespace

Perm sequence_perm(const Puzzle& p, const ShiftSequence& s) {
  Perm acc(p.n);
  for (const auto& m : s) acc = acc * p.shift_perm(m);
  return acc;
}

PairCanonical canonicalize_pair(const std::vector<int>& cyc1, const std::vector<int>& cyc2,
                                int degree) {
  PairCanonical pc;
  const auto shared = sorted_shared(cyc1, cyc2);
  pc.swapped = cyc2.size() < cyc1.size();
  const std::vector<int>& A = pc.swapped ? cyc2 : cyc1;
  const std::vector<int>& B = pc.swapped ? cyc1 : cyc2;
  pc.a = static_cast<int>(A.size());
  pc.b = static_cast<int>(B.size());

  std::vector<int> a_trav, b_trav;
  if (shared.size() == 1) {
    pc.kind = ConnectionKind::OneVertex;
    pc.m = pc.a + pc.b - 1;
    a_trav = rotate_to(A, shared[0]);
    b_trav = rotate_to(B, shared[0]);
  } else if (shared.size() == 2) {
    pc.kind = ConnectionKind::TwoAdjacent;
    pc.m = pc.a + pc.b - 2;
    int u = 0, v = 0;
    if (cycle_has_arc(A, shared[0], shared[1])) {
      u = shared[0];
      v = shared[1];
    } else if (cycle_has_arc(A, shared[1], shared[0])) {
      u = shared[1];
      v = shared[0];
    } else {
      throw std::invalid_argument("shared vertices not consecutive in the first cycle");
    }
    a_trav = rotate_to(A, u);
    if (cycle_has_arc(B, u, v)) {
      b_trav = rotate_to(B, u);
    } else if (cycle_has_arc(B, v, u)) {
      pc.flip_beta = true;
      b_trav = rotate_to(reversed_cycle(B), u);
    } else {
      throw std::invalid_argument("shared vertices not consecutive in the second cycle");
    }
  } else {
    throw std::invalid_argument("cycles are not properly interconnected");
  }

  std::vector<int> img(static_cast<size_t>(degree), 0);
  auto assign = [&img](int vertex, int label) {
    int& slot = img[static_cast<size_t>(vertex) - 1];
    if (slot != 0 && slot != label) throw std::logic_error("inconsistent pair relabeling");
    slot = label;
  };
  if (pc.kind == ConnectionKind::OneVertex) {
    assign(a_trav[0], pc.a);
    for (int k = 1; k < pc.a; ++k) assign(a_trav[static_cast<size_t>(k)], k);
    for (int k = 1; k < pc.b; ++k) assign(b_trav[static_cast<size_t>(k)], pc.a + k);
  } else {
    assign(a_trav[0], pc.a - 1);
    assign(a_trav[1], pc.a);
    for (int k = 2; k < pc.a; ++k) assign(a_trav[static_cast<size_t>(k)], k - 1);
    for (int k = 2; k < pc.b; ++k) assign(b_trav[static_cast<size_t>(k)], pc.a + k - 2);
  }
  int next = pc.m + 1;
  for (int v = 1; v <= degree; ++v)
    if (img[static_cast<size_t>(v) - 1] == 0) img[static_cast<size_t>(v) - 1] = next++;
  pc.phi = Perm::from_one_line(std::move(img));
  return pc;
}

GeneratorWord canonical_two_cycle_word(const PairCanonical& pc, const Perm& target_m) {
  if (target_m.degree() != pc.m) throw std::invalid_argument("target degree must equal union size");
  if (pc.kind == ConnectionKind::OneVertex)
    return canonical_word_1conn(pc.a, pc.b, pc.m, target_m);
  return canonical_word_2conn(pc.a, pc.b, pc.m, target_m);
}

GeneratorWord solve_pair_word(const std::vector<int>& cyc1, const std::vector<int>& cyc2,
                              int degree, const Perm& target) {
  const PairCanonical pc = canonicalize_pair(cyc1, cyc2, degree);
  const Perm target_m = restrict_to(conj(target, pc.phi), pc.m, "pair solve");
  GeneratorWord canon = canonical_two_cycle_word(pc, target_m);
  GeneratorWord out;
  for (const auto& l : canon.letters) {
    const bool alpha_role = l.gen == kAlpha;
    const int orig = (alpha_role != pc.swapped) ? 0 : 1;  // tuple index
    const bool flip = alpha_role ? pc.flip_alpha : pc.flip_beta;
    out.push(orig, flip ? -l.exp : l.exp);
  }
  return out;
}

namespace {

ShiftSequence pair_word_to_moves(const GeneratorWord& w, int ci, int cj) {
  ShiftSequence s;
  for (const auto& l : w.letters)
    s.push_back({l.gen == 0 ? ci : cj, l.exp >= 0 ? Direction::Forward : Direction::Backward});
  return s;
}

ShiftSequence solve_pair(const Puzzle& p, int ci, int cj, const Perm& target) {
  const GeneratorWord w = solve_pair_word(p.cycles[static_cast<size_t>(ci)],
                                          p.cycles[static_cast<size_t>(cj)], p.n, target);
  ShiftSequence s = pair_word_to_moves(w, ci, cj);
  if (!(sequence_perm(p, s) == target)) throw std::logic_error("pair solver produced a wrong word");
  return s;
}

}  // namespace

ShiftSequence solve_1connected(const Puzzle& p, const Perm& target) {
  const PuzzleFamily fam = detect_family(p);
  if (fam.tag != PuzzleFamily::Tag::OneConnected)
    throw std::invalid_argument("puzzle is not a two-cycle 1-connected instance");
  return solve_pair(p, 0, 1, target);
}

ShiftSequence solve_2connected(const Puzzle& p, const Perm& target) {
  const PuzzleFamily fam = detect_family(p);
  if (fam.tag != PuzzleFamily::Tag::TwoConnected)
    throw std::invalid_argument("puzzle is not a two-cycle 2-connected instance");
  return solve_pair(p, 0, 1, target);
}

// --- (4,4) plus a third cycle ---------------------------------------------

namespace {

struct CaseSpec {
  std::vector<int> tau;     // pattern cycle; labels > 6 are wildcards
  const char* word;         // empty: pair route via gamma1/gamma2
  int gamma = 0;            // 1 or 2 for the pair-route cases
  std::pair<int, int> transposition;
};

const std::vector<CaseSpec>& case_table() {
  static const std::vector<CaseSpec> t = {
      {{3, 4, 7, 8}, "", 1, {3, 4}},
      {{5, 6, 7, 8}, "", 2, {3, 5}},
      {{1, 7, 3, 4}, "t-2 a t a", 0, {3, 2}},
      {{1, 3, 4, 7}, "a b-1 a-1 t b t2", 0, {3, 4}},
      {{1, 3, 6, 7}, "b-1 a t-1 a b t2", 0, {3, 5}},
      {{1, 6, 3, 7}, "a b a-1 b t-1 b t", 0, {3, 1}},
      {{2, 6, 3, 7}, "a2 t2 a t2", 0, {3, 4}},
      {{2, 3, 6, 7}, "t-1 b-1 a b a-1 t a", 0, {3, 1}},
  };
  return t;
}

// Klein four-group of relabelings preserving the canonical (4,4) pair:
// identity; reversal of both squares; the square swap; their product.
std::vector<Perm> klein_elems(int degree) {
  return {
      Perm(degree),
      Perm::from_cycles(degree, {{1, 2}, {3, 4}, {5, 6}}),
      Perm::from_cycles(degree, {{1, 5}, {2, 6}}),
      Perm::from_cycles(degree, {{1, 6}, {2, 5}, {3, 4}}),
  };
}

// Letters for g alpha g^-1 and g beta g^-1 per Klein element (same order).
const std::vector<std::pair<Letter, Letter>>& klein_letter_map() {
  static const std::vector<std::pair<Letter, Letter>> t = {
      {{kAlpha, 1}, {kBeta, 1}},
      {{kAlpha, -1}, {kBeta, -1}},
      {{kBeta, 1}, {kAlpha, 1}},
      {{kBeta, -1}, {kAlpha, -1}},
  };
  return t;
}

// Matches `got` (an oriented cycle tuple) against a pattern; labels > 6 in
// the pattern are wildcards for distinct vertices > 6 in `got`.
bool match_pattern(const std::vector<int>& got, const std::vector<int>& pattern) {
  if (got.size() != pattern.size()) return false;
  const size_t len = got.size();
  for (size_t off = 0; off < len; ++off) {
    std::map<int, int> wild;
    std::set<int> used;
    bool ok = true;
    for (size_t i = 0; i < len && ok; ++i) {
      const int pv = pattern[i];
      const int gv = got[(off + i) % len];
      if (pv <= 6) {
        ok = pv == gv;
      } else if (gv <= 6) {
        ok = false;
      } else if (auto it = wild.find(pv); it != wild.end()) {
        ok = it->second == gv;
      } else if (used.count(gv)) {
        ok = false;
      } else {
        wild.emplace(pv, gv);
        used.insert(gv);
      }
    }
    if (ok) return true;
  }
  return false;
}

GeneratorWord parse_case_word(const std::string& text, const Letter& la, const Letter& lb,
                              int tau_exp) {
  GeneratorWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    Letter base;
    if (tok[0] == 'a') base = la;
    else if (tok[0] == 'b') base = lb;
    else base = Letter{2, tau_exp};  // gen 2 = third cycle
    int reps = 1, sign = 1;
    const std::string rest = tok.substr(1);
    if (rest == "-1") sign = -1;
    else if (rest == "-2") { sign = -1; reps = 2; }
    else if (rest == "2") reps = 2;
    for (int r = 0; r < reps; ++r) w.push(base.gen, sign * base.exp);
  }
  return w;
}

std::vector<int> single_cycle_tuple(const Perm& g) {
  const Cycles c = g.cycle_decomposition();
  if (c.size() != 1) throw std::logic_error("expected a single cycle");
  return c.front();
}

// Finds a word over {0: alpha, 1: beta, 2: tau0} whose product is a
// transposition touching {3,4}, in the canonical coordinates of the (4,4)
// pair. Returns the word and its value.
std::optional<std::pair<GeneratorWord, Perm>> transposition_word(
    int degree, const std::vector<int>& third_tuple, const Perm& tau0) {
  const std::vector<int> alpha_tuple = {1, 2, 3, 4};
  const std::vector<int> beta_tuple = {3, 4, 5, 6};
  const Perm alpha = Perm::from_cycles(degree, {alpha_tuple});
  const Perm beta = Perm::from_cycles(degree, {beta_tuple});
  const int tlen = static_cast<int>(third_tuple.size());

  auto finish = [&](GeneratorWord w, const Perm& want) -> std::optional<std::pair<GeneratorWord, Perm>> {
    const Perm got = eval_word(w, {alpha, beta, tau0});
    if (!(got == want)) throw std::logic_error("transposition word evaluated wrongly");
    return std::make_pair(std::move(w), want);
  };

  // Pair routes through a non-(4,4) interconnection.
  for (int which = 0; which < 2; ++which) {
    const auto& other = which == 0 ? alpha_tuple : beta_tuple;
    if (!properly_interconnected(third_tuple, other)) continue;
    const auto sh = sorted_shared(third_tuple, other);
    if (sh.size() == 2 && tlen == 4) continue;  // would be a (4,4) pair again
    const Perm want = Perm::from_cycles(degree, {{3, 4}});
    GeneratorWord w = solve_pair_word(third_tuple, other, degree, want);
    GeneratorWord mapped;
    for (const auto& l : w.letters)
      mapped.push(l.gen == 0 ? 2 : which, l.exp);
    return finish(std::move(mapped), want);
  }

  const bool outside = std::any_of(third_tuple.begin(), third_tuple.end(),
                                   [](int v) { return v > 6; });
  if (tlen == 4 && outside) {
    const auto kleins = klein_elems(degree);
    for (size_t gi = 0; gi < kleins.size(); ++gi) {
      const Perm& g = kleins[gi];
      for (int e : {1, -1}) {
        const Perm tau_ge = conj(e > 0 ? tau0 : tau0.inverse(), g);
        const std::vector<int> tuple = single_cycle_tuple(tau_ge);
        for (const auto& spec : case_table()) {
          if (!match_pattern(tuple, spec.tau)) continue;
          const auto [la, lb] = klein_letter_map()[gi];
          const Perm want = Perm::from_cycles(
              degree, {{g(spec.transposition.first), g(spec.transposition.second)}});
          if (!spec.word[0]) {
            // pair route against gamma1 or gamma2, conjugated back by g
            const std::vector<int> gamma_pat =
                spec.gamma == 1 ? std::vector<int>{1, 4, 5, 6, 2} : std::vector<int>{1, 2, 3, 6, 5};
            std::vector<int> gamma_real;
            for (int v : gamma_pat) gamma_real.push_back(g(v));
            // gamma1 = alpha^-1 beta, gamma2 = alpha beta^-1, in pattern
            // coordinates; conjugation swaps/inverts the letters via the map.
            GeneratorWord gamma_word;
            if (spec.gamma == 1) {
              gamma_word.push(la.gen, -la.exp);
              gamma_word.push(lb.gen, lb.exp);
            } else {
              gamma_word.push(la.gen, la.exp);
              gamma_word.push(lb.gen, -lb.exp);
            }
            std::vector<int> tau_real_tuple = single_cycle_tuple(e > 0 ? tau0 : tau0.inverse());
            GeneratorWord w = solve_pair_word(tau_real_tuple, gamma_real, degree, want);
            GeneratorWord mapped;
            for (const auto& l : w.letters) {
              if (l.gen == 0) mapped.push(2, e * l.exp);  // gen 0 was tau0^e
              else if (l.exp >= 0) mapped.push_word(gamma_word);
              else mapped.push_inverse(gamma_word);
            }
            return finish(std::move(mapped), want);
          }
          GeneratorWord w = parse_case_word(spec.word, la, lb, e);
          return finish(std::move(w), want);
        }
      }
    }
    return std::nullopt;
  }

  if (!outside) {
    // Third cycle inside {1..6}: exhaustive word search in the subgroup.
    const Perm a6 = Perm::from_cycles(6, {alpha_tuple});
    const Perm b6 = Perm::from_cycles(6, {beta_tuple});
    const Perm t6 = restrict_to(tau0, 6, "inside third cycle");
    const std::vector<std::pair<Letter, Perm>> letters = {
        {{0, 1}, a6}, {{0, -1}, a6}, {{1, 1}, b6}, {{1, -1}, b6}, {{2, 1}, t6}, {{2, -1}, t6}};
    auto accept = [](const Perm& x) {
      const Cycles c = x.cycle_decomposition();
      return c.size() == 1 && c.front().size() == 2 &&
             (c.front()[0] == 3 || c.front()[0] == 4 || c.front()[1] == 3 || c.front()[1] == 4);
    };
    auto w = group_bfs_find(letters, 6, accept);
    if (!w) return std::nullopt;
    const Perm value6 = eval_word(*w, {a6, b6, t6});
    return finish(std::move(*w), value6.extended(degree));
  }
  return std::nullopt;
}

}  // namespace

ShiftSequence word_44_plus_third(const Puzzle& p, int c1, int c2,
                                 const std::vector<int>& third_candidates, const Perm& target) {
  const PairCanonical pc =
      canonicalize_pair(p.cycles[static_cast<size_t>(c1)], p.cycles[static_cast<size_t>(c2)], p.n);
  if (pc.kind != ConnectionKind::TwoAdjacent || pc.a != 4 || pc.b != 4)
    throw std::invalid_argument("cycles do not induce a 2-connected (4,4) pair");
  const Perm tgt = conj(target, pc.phi);
  for (int v = 7; v <= p.n; ++v)
    if (tgt(v) != v) throw NotInGroup("target not supported on the (4,4) pair");

  const Perm alpha = Perm::from_cycles(p.n, {{1, 2, 3, 4}});
  const Perm beta = Perm::from_cycles(p.n, {{3, 4, 5, 6}});

  for (int c3 : third_candidates) {
    if (c3 == c1 || c3 == c2) continue;
    std::vector<int> third_tuple;
    for (int v : p.cycles[static_cast<size_t>(c3)]) third_tuple.push_back(pc.phi(v));
    const Perm tau0 = Perm::from_cycles(p.n, {third_tuple});
    std::optional<std::pair<GeneratorWord, Perm>> tw;
    try {
      tw = transposition_word(p.n, third_tuple, tau0);
    } catch (const NotInGroup&) {
      continue;
    }
    if (!tw) continue;
    const auto& [tword, tvalue] = *tw;

    // The transposition plus a 5-cycle missing one of its endpoints induce a
    // 1-connected (2,5)-puzzle on {1..6}; solve it exhaustively.
    const auto ttuple = single_cycle_tuple(tvalue);
    const bool use_gamma1 = ttuple[0] == 3 || ttuple[1] == 3;  // gamma1 misses 3
    const Perm gamma = use_gamma1 ? alpha.inverse() * beta : alpha * beta.inverse();
    GeneratorWord gamma_word = use_gamma1 ? letters_of({{0, -1}, {1, 1}})
                                          : letters_of({{0, 1}, {1, -1}});
    const Perm t6 = restrict_to(tvalue, 6, "transposition");
    const Perm g6 = restrict_to(gamma, 6, "gamma companion");
    const Perm want6 = restrict_to(tgt, 6, "44 target");
    const std::vector<std::pair<Letter, Perm>> letters = {
        {{3, 1}, t6}, {{4, 1}, g6}, {{4, -1}, g6}};
    auto solved = group_bfs_find(letters, 6, [&](const Perm& x) { return x == want6; });
    if (!solved) continue;

    GeneratorWord full;
    for (const auto& l : solved->letters) {
      if (l.gen == 3) full.push_word(tword);
      else if (l.exp >= 0) full.push_word(gamma_word);
      else full.push_inverse(gamma_word);
    }
    // translate canonical letters {0: alpha, 1: beta, 2: third} to moves
    ShiftSequence seq;
    for (const auto& l : full.letters) {
      int cyc;
      bool flip;
      if (l.gen == 0) {
        cyc = pc.swapped ? c2 : c1;
        flip = pc.flip_alpha;
      } else if (l.gen == 1) {
        cyc = pc.swapped ? c1 : c2;
        flip = pc.flip_beta;
      } else {
        cyc = c3;
        flip = false;
      }
      const int ex = flip ? -l.exp : l.exp;
      seq.push_back({cyc, ex >= 0 ? Direction::Forward : Direction::Backward});
    }
    if (!(sequence_perm(p, seq) == target))
      throw std::logic_error("44-plus-third produced a wrong sequence");
    return seq;
  }
  throw ConfigurationNotMatched("no usable third cycle for the (4,4) pair");
}

// --- covering walk ----------------------------------------------------------

namespace {

struct WalkBuilder {
  const Puzzle& p;
  const InterconnectionGraph graph;
  std::vector<int> relevant;
  std::vector<std::vector<std::pair<int, int>>> children;  // per cycle: (child, entry vertex)
  std::vector<int> walk;

  explicit WalkBuilder(const Puzzle& puz, std::vector<int> rel)
      : p(puz), graph(interconnection_graph(puz)), relevant(std::move(rel)) {
    children.resize(p.cycles.size());
  }

  int cycle_len(int c) const { return static_cast<int>(p.cycles[static_cast<size_t>(c)].size()); }

  void build_tree(int root) {
    std::set<int> rel(relevant.begin(), relevant.end());
    std::set<int> seen{root};
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      for (int nb : graph.adjacent[static_cast<size_t>(c)]) {
        if (!rel.count(nb) || seen.count(nb)) continue;
        const auto* e = graph.edge_between(c, nb);
        // Entry vertex: a shared vertex; length-2 doubled edges covered by
        // the parent carry no new vertices and are dropped from the walk.
        if (cycle_len(nb) == 2 && e->kind == ConnectionKind::TwoAdjacent) {
          seen.insert(nb);
          continue;
        }
        seen.insert(nb);
        children[static_cast<size_t>(c)].push_back({nb, e->shared.front()});
        queue.push_back(nb);
      }
    }
    if (seen.size() != std::set<int>(relevant.begin(), relevant.end()).size())
      throw MalformedWalk("relevant set is not connected");
  }

  void emit(int v) { walk.push_back(v); }

  int last_emitted() const { return walk.empty() ? -1 : walk.back(); }

  // Emits the visit of cycle c entered at `entry` (already emitted),
  // returning with `entry` as the final emission. prev/next are the
  // vertices emitted around the visit, used to orient the first and last
  // steps so three consecutive walk entries stay distinct.
  void visit(int c, int entry, int prev, int next) {
    const auto& tuple = p.cycles[static_cast<size_t>(c)];
    const int len = static_cast<int>(tuple.size());
    if (len == 2) {
      visit_two_cycle(c, entry, next);
      return;
    }
    std::vector<int> ord = rotate_to(tuple, entry);
    // Orient so the first step avoids prev and the last step avoids next.
    if (ord[1] == prev || ord[static_cast<size_t>(len) - 1] == next) {
      std::vector<int> rev = rotate_to(reversed_cycle(tuple), entry);
      if (rev[1] != prev && rev[static_cast<size_t>(len) - 1] != next) ord = std::move(rev);
      else if (ord[1] == prev && ord[static_cast<size_t>(len) - 1] == next)
        throw MalformedWalk("cannot orient a cycle visit");
    }
    auto pending = children[static_cast<size_t>(c)];
    // full loop first: covers every vertex of the cycle
    for (int i = 1; i < len; ++i) emit(ord[static_cast<size_t>(i)]);
    emit(entry);
    int idx = 0;
    while (!pending.empty()) {
      const int here = ord[static_cast<size_t>(idx)];
      auto it = std::find_if(pending.begin(), pending.end(),
                             [&](const auto& ch) { return ch.second == here; });
      if (it != pending.end()) {
        const auto [child, centry] = *it;
        pending.erase(it);
        const int nxt = ord[static_cast<size_t>((idx + 1) % len)];
        if (cycle_len(child) == 2) {
          visit_two_cycle(child, centry, nxt);
        } else {
          visit(child, centry, last_before_current(), nxt);
        }
      } else {
        idx = (idx + 1) % len;
        emit(ord[static_cast<size_t>(idx)]);
      }
    }
    while (idx != 0) {
      idx = (idx + 1) % len;
      emit(ord[static_cast<size_t>(idx)]);
    }
  }

  int last_before_current() const {
    return walk.size() >= 2 ? walk[walk.size() - 2] : -1;
  }

  // One-vertex 2-cycle (entry, far): the far vertex is visited and the walk
  // skips re-listing the entry afterwards; a single child may hang at the
  // far vertex.
  void visit_two_cycle(int c, int entry, int next_on_parent) {
    const auto& tuple = p.cycles[static_cast<size_t>(c)];
    const int far = tuple[0] == entry ? tuple[1] : tuple[0];
    const auto& kids = children[static_cast<size_t>(c)];
    if (kids.empty()) {
      emit(far);  // skip rule: ..., prev, entry, far, next-on-parent, ...
      return;
    }
    if (kids.size() > 1 || kids.front().second != far)
      throw MalformedWalk("unsupported branching through a length-2 cycle");
    emit(far);
    visit(kids.front().first, far, entry, entry);
    emit(entry);
  }
};

}  // namespace

std::vector<int> build_walk(const Puzzle& p, const std::vector<int>& relevant) {
  if (relevant.size() < 2) throw std::invalid_argument("relevant set needs at least two cycles");
  WalkBuilder wb(p, relevant);
  int root = -1;
  for (int c : relevant)
    if (wb.cycle_len(c) >= 3) {
      root = c;
      break;
    }
  if (root < 0) throw MalformedWalk("all relevant cycles have length 2");
  wb.build_tree(root);
  const int start = p.cycles[static_cast<size_t>(root)].front();
  wb.emit(start);
  wb.visit(root, start, -1, -1);

  // sanity: coverage and local distinctness
  std::set<int> covered(wb.walk.begin(), wb.walk.end());
  if (static_cast<int>(covered.size()) != p.n)
    throw MalformedWalk("walk does not cover every vertex");
  for (size_t i = 2; i < wb.walk.size(); ++i) {
    if (wb.walk[i] == wb.walk[i - 1] || wb.walk[i] == wb.walk[i - 2] ||
        wb.walk[i - 1] == wb.walk[i - 2])
      throw MalformedWalk("three consecutive walk entries must be distinct");
  }
  return wb.walk;
}

// --- walk-alphabet words ----------------------------------------------------

namespace {

struct WalkContext {
  std::vector<int> walk;                 // 1-based vertices
  std::vector<int> mu;                   // per vertex: first 1-based index in walk
  std::vector<int> rank;                 // per vertex: 1-based rank by mu
  std::vector<int> by_rank;              // rank -> vertex

  explicit WalkContext(const std::vector<int>& w, int n) : walk(w) {
    mu.assign(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < walk.size(); ++i) {
      const int v = walk[i];
      if (v < 1 || v > n) throw MalformedWalk("walk vertex out of range");
      if (mu[static_cast<size_t>(v)] == 0) mu[static_cast<size_t>(v)] = static_cast<int>(i) + 1;
    }
    for (int v = 1; v <= n; ++v)
      if (mu[static_cast<size_t>(v)] == 0) throw MalformedWalk("walk misses a vertex");
    by_rank.resize(static_cast<size_t>(n) + 1);
    std::vector<int> vs;
    for (int v = 1; v <= n; ++v) vs.push_back(v);
    std::sort(vs.begin(), vs.end(),
              [&](int x, int y) { return mu[static_cast<size_t>(x)] < mu[static_cast<size_t>(y)]; });
    rank.assign(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < vs.size(); ++i) {
      rank[static_cast<size_t>(vs[i])] = static_cast<int>(i) + 1;
      by_rank[i + 1] = vs[i];
    }
  }

  // Alphabet letter whose last element is vertex c: positions mu(c)-2..mu(c).
  int letter_for(int c) const { return mu[static_cast<size_t>(c)] - 3; }

  // Generates an oriented 3-cycle whose support lies in the walk's vertex
  // set; at most 3 * rank(last element) letters.
  void gen3(int x, int y, int c, GeneratorWord& out) const {
    // normalize so the max-rank element is last
    const int rx = rank[static_cast<size_t>(x)], ry = rank[static_cast<size_t>(y)],
              rc = rank[static_cast<size_t>(c)];
    if (rx > ry && rx > rc) return gen3(y, c, x, out);
    if (ry > rx && ry > rc) return gen3(c, x, y, out);
    const int li = letter_for(c);
    const int a = walk[static_cast<size_t>(li)];
    const int b = walk[static_cast<size_t>(li) + 1];
    if ((x == a && y == b)) {
      out.push(li, 1);
      return;
    }
    if (x == b && y == a) {
      out.push(li, -1);
      return;
    }
    // sigma2 = (a b c); conjugate the target into the rank prefix
    auto s2 = [&](int v) { return v == a ? b : v == b ? c : v == c ? a : v; };
    auto s2inv = [&](int v) { return v == b ? a : v == c ? b : v == a ? c : v; };
    if (x != b && y != b) {
      // (x y c) = s2^-1 (s2(x) s2(y) a) s2
      out.push(li, -1);
      gen3(s2(x), s2(y), a, out);
      out.push(li, 1);
    } else {
      // (x y c) = s2 (s2^-1(x) s2^-1(y) b) s2^-1
      out.push(li, 1);
      gen3(s2inv(x), s2inv(y), b, out);
      out.push(li, -1);
    }
  }
};

}  // namespace

GeneratorWord word_walk_3cycles(const std::vector<int>& walk, int n, const Perm& target) {
  if (!target.is_even()) throw OddTarget("walk alphabet generates only even permutations");
  WalkContext ctx(walk, n);
  if (target.is_identity()) return {};
  // relabel vertices by rank and sort with adjacent rank 3-cycles
  std::vector<int> img(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) img[static_cast<size_t>(v) - 1] = ctx.rank[static_cast<size_t>(v)];
  const Perm phi = Perm::from_one_line(std::move(img));
  const GeneratorWord ranked = word_an_adjacent_3cycles(n, conj(target, phi));
  GeneratorWord out;
  for (const auto& l : ranked.letters) {
    const int r = l.gen + 1;  // 3-cycle on ranks (r, r+1, r+2)
    const int x = ctx.by_rank[static_cast<size_t>(r)];
    const int y = ctx.by_rank[static_cast<size_t>(r) + 1];
    const int z = ctx.by_rank[static_cast<size_t>(r) + 2];
    if (l.exp >= 0) ctx.gen3(x, y, z, out);
    else ctx.gen3(x, z, y, out);
  }
  return out;
}

// --- generalized solver -----------------------------------------------------

namespace {

std::optional<std::pair<int, int>> pair_for_triple(const Puzzle& p,
                                                   const std::vector<int>& relevant,
                                                   const InterconnectionGraph& g, int x, int y,
                                                   int z, bool allow44) {
  auto contains = [&](int ci, int v) {
    const auto& c = p.cycles[static_cast<size_t>(ci)];
    return std::find(c.begin(), c.end(), v) != c.end();
  };
  for (size_t i = 0; i < relevant.size(); ++i) {
    for (size_t j = i + 1; j < relevant.size(); ++j) {
      const int ci = relevant[i], cj = relevant[j];
      if (!g.edge_between(ci, cj)) continue;
      const auto* e = g.edge_between(ci, cj);
      const bool is44 = e->kind == ConnectionKind::TwoAdjacent &&
                        p.cycles[static_cast<size_t>(ci)].size() == 4 &&
                        p.cycles[static_cast<size_t>(cj)].size() == 4;
      if (is44 != allow44) continue;
      auto in_union = [&](int v) { return contains(ci, v) || contains(cj, v); };
      if (in_union(x) && in_union(y) && in_union(z)) return std::make_pair(ci, cj);
    }
  }
  return std::nullopt;
}

ShiftSequence realize_3cycle(const Puzzle& p, const std::vector<int>& relevant,
                             const InterconnectionGraph& g, int x, int y, int z) {
  const Perm target = Perm::from_cycles(p.n, {{x, y, z}});
  if (auto pr = pair_for_triple(p, relevant, g, x, y, z, /*allow44=*/false))
    return solve_pair(p, pr->first, pr->second, target);
  if (auto pr = pair_for_triple(p, relevant, g, x, y, z, /*allow44=*/true)) {
    std::vector<int> thirds;
    for (int c : relevant) {
      if (c == pr->first || c == pr->second) continue;
      if (g.edge_between(c, pr->first) || g.edge_between(c, pr->second)) thirds.push_back(c);
    }
    return word_44_plus_third(p, pr->first, pr->second, thirds, target);
  }
  throw MalformedWalk("no relevant pair realizes a walk triple");
}

}  // namespace

ShiftSequence solve_generalized(const Puzzle& p, const std::vector<int>& relevant,
                                const Perm& target) {
  if (target.degree() != p.n) throw std::invalid_argument("target degree mismatch");
  if (relevant.size() == 2)
    return solve_pair(p, relevant[0], relevant[1], target);

  // single-move shortcut
  for (int ci = 0; ci < p.num_cycles(); ++ci) {
    if (target == p.shift_perm(ci, Direction::Forward)) return {{ci, Direction::Forward}};
    if (target == p.shift_perm(ci, Direction::Backward)) return {{ci, Direction::Backward}};
  }

  ShiftSequence prefix;
  Perm rest = target;
  if (!target.is_even()) {
    int even_cycle = -1;
    for (int ci = 0; ci < p.num_cycles(); ++ci)
      if (p.cycles[static_cast<size_t>(ci)].size() % 2 == 0) {
        even_cycle = ci;
        break;
      }
    if (even_cycle < 0) throw NotInGroup("odd target but every cycle has odd length");
    prefix.push_back({even_cycle, Direction::Forward});
    rest = p.shift_perm(even_cycle, Direction::Forward).inverse() * target;
  }

  const auto g = interconnection_graph(p);
  const std::vector<int> walk = build_walk(p, relevant);
  const GeneratorWord w3 = word_walk_3cycles(walk, p.n, rest);

  std::unordered_map<int, ShiftSequence> memo;
  ShiftSequence seq = prefix;
  for (const auto& l : w3.letters) {
    auto it = memo.find(l.gen);
    if (it == memo.end()) {
      const int x = walk[static_cast<size_t>(l.gen)];
      const int y = walk[static_cast<size_t>(l.gen) + 1];
      const int z = walk[static_cast<size_t>(l.gen) + 2];
      it = memo.emplace(l.gen, realize_3cycle(p, relevant, g, x, y, z)).first;
    }
    if (l.exp >= 0) seq.insert(seq.end(), it->second.begin(), it->second.end());
    else {
      const ShiftSequence inv = inverted(it->second);
      seq.insert(seq.end(), inv.begin(), inv.end());
    }
  }
  if (!(sequence_perm(p, seq) == target))
    throw std::logic_error("generalized solver produced a wrong sequence");
  return seq;
}

// --- colored top level ------------------------------------------------------

namespace {

Perm lift_placements(const TokenPlacement& f0, const TokenPlacement& ft) {
  // color-consistent bijection: f0(pi(v)) = ft(v), classes matched in
  // increasing vertex order
  const int n = f0.size();
  std::map<int, std::vector<int>> from, to;
  for (int v = 1; v <= n; ++v) {
    from[f0.at(v)].push_back(v);
    to[ft.at(v)].push_back(v);
  }
  std::vector<int> img(static_cast<size_t>(n));
  for (auto& [color, dst] : to) {
    const auto& src = from.at(color);
    for (size_t i = 0; i < dst.size(); ++i)
      img[static_cast<size_t>(dst[i]) - 1] = src[i];
  }
  return Perm::from_one_line(std::move(img));
}

std::optional<Perm> even_lift(const Perm& pi, const TokenPlacement& ft) {
  if (pi.is_even()) return pi;
  for (int u = 1; u <= ft.size(); ++u)
    for (int w = u + 1; w <= ft.size(); ++w)
      if (ft.at(u) == ft.at(w)) return pi * Perm::transposition(pi.degree(), u, w);
  return std::nullopt;
}

SolveOutcome bfs_fallback(const Puzzle& p, const TokenPlacement& f0, const TokenPlacement& ft,
                          const std::string& provenance) {
  SolveOutcome out;
  out.provenance = provenance;
  try {
    SearchResult r = bfs_distance(p, f0, ft);
    if (r.distance) {
      out.status = SolveOutcome::Status::Solved;
      out.sequence = *r.witness;
    } else {
      out.status = SolveOutcome::Status::Unreachable;
    }
  } catch (const CapExceeded&) {
    out.status = SolveOutcome::Status::CapExceeded;
  }
  return out;
}

}  // namespace

SolveOutcome solve(const Puzzle& p, const TokenPlacement& f0, const TokenPlacement& ft) {
  if (f0.size() != p.n || ft.size() != p.n)
    throw std::invalid_argument("placement size does not match puzzle");
  if (!compatible(f0, ft))
    throw IncompatiblePlacements("start and target have different color multisets");
  SolveOutcome out;
  if (f0 == ft) {
    out.status = SolveOutcome::Status::Solved;
    out.provenance = "trivial";
    return out;
  }

  const PuzzleFamily fam = detect_family(p);
  const Perm pi = lift_placements(f0, ft);

  auto finish = [&](ShiftSequence seq, std::string prov) {
    if (!(apply_sequence(f0, p, seq) == ft))
      throw std::logic_error("solver produced a sequence that misses the target");
    out.status = SolveOutcome::Status::Solved;
    out.sequence = std::move(seq);
    out.provenance = std::move(prov);
    return out;
  };
  auto unreachable = [&](std::string prov) {
    out.status = SolveOutcome::Status::Unreachable;
    out.provenance = std::move(prov);
    return out;
  };

  switch (fam.tag) {
    case PuzzleFamily::Tag::OneConnected:
    case PuzzleFamily::Tag::TwoConnected: {
      const bool is44 = fam.tag == PuzzleFamily::Tag::TwoConnected && fam.a == 4 && fam.b == 4;
      if (is44) return bfs_fallback(p, f0, ft, "two-connected(4,4)/bfs");
      const bool alternating = fam.a % 2 == 1 && fam.b % 2 == 1;
      Perm sigma = pi;
      if (alternating) {
        auto fixed = even_lift(pi, ft);
        if (!fixed) return unreachable("odd lift in an alternating group, all colors distinct");
        sigma = *fixed;
      }
      std::ostringstream prov;
      prov << (fam.tag == PuzzleFamily::Tag::OneConnected ? "one-connected(" : "two-connected(")
           << fam.a << "," << fam.b << ")";
      ShiftSequence seq = fam.tag == PuzzleFamily::Tag::OneConnected ? solve_1connected(p, sigma)
                                                                     : solve_2connected(p, sigma);
      return finish(std::move(seq), prov.str());
    }
    case PuzzleFamily::Tag::Generalized: {
      if (p.n <= 6) return bfs_fallback(p, f0, ft, "generalized-small/bfs");
      bool all_odd = true;
      for (const auto& c : p.cycles)
        if (c.size() % 2 == 0) all_odd = false;
      Perm sigma = pi;
      if (all_odd) {
        auto fixed = even_lift(pi, ft);
        if (!fixed) return unreachable("odd lift in an alternating group, all colors distinct");
        sigma = *fixed;
      }
      return finish(solve_generalized(p, fam.relevant, sigma), "generalized");
    }
    case PuzzleFamily::Tag::Unrecognized:
      return bfs_fallback(p, f0, ft, "unrecognized/bfs-oracle");
  }
  return unreachable("unhandled family");
}

ShiftSequence peephole(const Puzzle& p, const ShiftSequence& s) {
  ShiftSequence out;
  for (const auto& m : s) {
    if (!out.empty() && out.back().cycle == m.cycle &&
        (out.back().dir != m.dir || p.cycles[static_cast<size_t>(m.cycle)].size() == 2)) {
      out.pop_back();
    } else {
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace tokenshift
