#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tokenshift {

/// Disjoint-cycle notation: a list of cycles, each a list of distinct
/// 1-based vertex labels of length >= 2. Fixed points are omitted.
using Cycles = std::vector<std::vector<int>>;

enum class Parity { Even, Odd };

inline Parity operator^(Parity a, Parity b) {
  return a == b ? Parity::Even : Parity::Odd;
}

/// A permutation of {1..n}. Immutable after construction.
///
/// Products follow the (right-to-left) function composition convention:
/// (p * q)(v) = p(q(v)), so the right factor is applied first. Writing a
/// product "p q" in the usual algebraic left-to-right order therefore maps
/// directly onto p * q. Normative fixture:
///   (1 2 3) * (3 4 5) has one-line form [2 3 4 5 1], not [2 4 1 5 3].
class Perm {
public:
  explicit Perm(int degree = 1);

  /// From a one-line image vector: image[i] = p(i+1), values 1..n.
  static Perm from_one_line(std::vector<int> image);

  /// From disjoint cycles. Throws on repeated or out-of-range labels.
  static Perm from_cycles(int degree, const Cycles& cycles);

  static Perm transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[static_cast<size_t>(v) - 1]; }
  bool is_identity() const;

  /// (p * q)(v) = p(q(v)). Throws on degree mismatch.
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  /// h^-1 * this * h. Preserves cycle structure.
  Perm conjugate_by(const Perm& h) const;
  Perm power(long long e) const;

  Parity parity() const;
  bool is_even() const { return parity() == Parity::Even; }

  /// Canonical form: each cycle starts at its minimum element, cycles
  /// sorted by that minimum; fixed points omitted.
  Cycles cycle_decomposition() const;

  /// Extend with fixed points up to `degree`.
  Perm extended(int degree) const;

  const std::vector<int>& one_line() const { return image_; }

  bool operator==(const Perm& rhs) const = default;

  std::string one_line_string() const;   // "[2 3 4 5 1]"
  std::string cycle_string() const;      // "(1 3 4)(2 6)(5 7)", identity = "()"

private:
  std::vector<int> image_;
};

/// Parses either notation: "[2 3 1]" (degree from length) or
/// "(1 2 3)(4 5)" / "()" (degree must be supplied).
Perm parse_perm(const std::string& text, int degree);

}  // namespace tokenshift
