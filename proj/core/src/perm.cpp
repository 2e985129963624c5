#include "tokenshift/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tokenshift {

Perm::Perm(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  image_.resize(static_cast<size_t>(degree));
  for (int v = 1; v <= degree; ++v) image_[static_cast<size_t>(v) - 1] = v;
}

Perm Perm::from_one_line(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  if (n < 1) throw std::invalid_argument("empty one-line image");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int x : image) {
    if (x < 1 || x > n) throw std::invalid_argument("one-line value out of range");
    if (seen[static_cast<size_t>(x) - 1]) throw std::invalid_argument("one-line value repeated");
    seen[static_cast<size_t>(x) - 1] = true;
  }
  Perm p(n);
  p.image_ = std::move(image);
  return p;
}

Perm Perm::from_cycles(int degree, const Cycles& cycles) {
  Perm p(degree);
  std::vector<bool> used(static_cast<size_t>(degree), false);
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) throw std::invalid_argument("cycle shorter than 2");
    for (size_t i = 0; i < cyc.size(); ++i) {
      int v = cyc[i];
      if (v < 1 || v > degree) throw std::invalid_argument("cycle label out of range");
      if (used[static_cast<size_t>(v) - 1]) throw std::invalid_argument("cycle label repeated");
      used[static_cast<size_t>(v) - 1] = true;
      p.image_[static_cast<size_t>(v) - 1] = cyc[(i + 1) % cyc.size()];
    }
  }
  return p;
}

Perm Perm::transposition(int degree, int a, int b) {
  return from_cycles(degree, {{a, b}});
}

bool Perm::is_identity() const {
  for (int v = 1; v <= degree(); ++v)
    if ((*this)(v) != v) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in composition");
  Perm out(degree());
  for (int v = 1; v <= degree(); ++v)
    out.image_[static_cast<size_t>(v) - 1] = (*this)(rhs(v));
  return out;
}

Perm Perm::inverse() const {
  Perm out(degree());
  for (int v = 1; v <= degree(); ++v)
    out.image_[static_cast<size_t>((*this)(v)) - 1] = v;
  return out;
}

Perm Perm::conjugate_by(const Perm& h) const {
  return h.inverse() * (*this) * h;
}

Perm Perm::power(long long e) const {
  Perm base = e >= 0 ? *this : inverse();
  long long k = e >= 0 ? e : -e;
  Perm acc(degree());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Parity Perm::parity() const {
  // sum of (len - 1) over cycles
  int transpositions = 0;
  std::vector<bool> seen(image_.size(), false);
  for (int v = 1; v <= degree(); ++v) {
    if (seen[static_cast<size_t>(v) - 1]) continue;
    int len = 0;
    for (int u = v; !seen[static_cast<size_t>(u) - 1]; u = (*this)(u)) {
      seen[static_cast<size_t>(u) - 1] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

Cycles Perm::cycle_decomposition() const {
  Cycles out;
  std::vector<bool> seen(image_.size(), false);
  for (int v = 1; v <= degree(); ++v) {
    if (seen[static_cast<size_t>(v) - 1] || (*this)(v) == v) continue;
    std::vector<int> cyc;
    for (int u = v; !seen[static_cast<size_t>(u) - 1]; u = (*this)(u)) {
      seen[static_cast<size_t>(u) - 1] = true;
      cyc.push_back(u);
    }
    out.push_back(std::move(cyc));
  }
  // min-first start is automatic (outer loop scans upward); cycles already
  // sorted by minimum for the same reason.
  return out;
}

Perm Perm::extended(int degree) const {
  if (degree < this->degree()) throw std::invalid_argument("cannot shrink a permutation");
  Perm out(degree);
  for (int v = 1; v <= this->degree(); ++v)
    out.image_[static_cast<size_t>(v) - 1] = (*this)(v);
  return out;
}

std::string Perm::one_line_string() const {
  std::ostringstream os;
  os << '[';
  for (int v = 1; v <= degree(); ++v) {
    if (v > 1) os << ' ';
    os << (*this)(v);
  }
  os << ']';
  return os.str();
}

std::string Perm::cycle_string() const {
  const Cycles cycles = cycle_decomposition();
  if (cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycles) {
    os << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

Perm parse_perm(const std::string& text, int degree) {
  auto first_nonspace = text.find_first_not_of(" \t\n");
  if (first_nonspace == std::string::npos) throw std::invalid_argument("empty permutation text");
  char c = text[first_nonspace];
  if (c == '[') {
    std::vector<int> image;
    std::string body = text;
    std::replace(body.begin(), body.end(), '[', ' ');
    std::replace(body.begin(), body.end(), ']', ' ');
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream is(body);
    int x;
    while (is >> x) image.push_back(x);
    return Perm::from_one_line(std::move(image));
  }
  if (c == '(') {
    Cycles cycles;
    std::vector<int> cur;
    std::string num;
    bool in_cycle = false;
    auto flush_num = [&] {
      if (!num.empty()) {
        cur.push_back(std::stoi(num));
        num.clear();
      }
    };
    for (char ch : text) {
      if (ch == '(') {
        in_cycle = true;
        cur.clear();
      } else if (ch == ')') {
        flush_num();
        if (cur.size() == 1) throw std::invalid_argument("singleton cycle in permutation text");
        if (cur.size() >= 2) cycles.push_back(cur);
        cur.clear();
        in_cycle = false;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        num.push_back(ch);
      } else if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n') {
        flush_num();
      } else {
        throw std::invalid_argument(std::string("unexpected character in permutation text: ") + ch);
      }
    }
    if (in_cycle) throw std::invalid_argument("unclosed cycle in permutation text");
    return Perm::from_cycles(degree, cycles);
  }
  throw std::invalid_argument("permutation text must start with '[' or '('");
}

}  // namespace tokenshift
