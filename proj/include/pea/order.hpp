#pragma once

#include "pea/element_set.hpp"
#include "pea/table.hpp"

#include <optional>
#include <vector>

namespace pea {

/// Order induced by a pseudo-effect algebra: a <= b iff a+c = b for some c.
///
/// Holds the full relation plus precomputed (possibly missing) binary meets
/// and joins and the two residuals of every comparable pair.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const noexcept { return n_; }
  bool leq(Element a, Element b) const { return leq_[at(a, b)] != 0; }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }

  std::optional<Element> meet(Element a, Element b) const { return opt(meet_[at(a, b)]); }
  std::optional<Element> join(Element a, Element b) const { return opt(join_[at(a, b)]); }

  /// a and b are disjoint iff 0 is their only common lower bound, which is
  /// the same as saying a ^ b exists and equals 0.
  bool disjoint(Element a, Element b) const { return meet_[at(a, b)] == 0; }

  /// c with a + c = b, when a <= b.
  std::optional<Element> right_residual(Element a, Element b) const { return opt(right_[at(a, b)]); }
  /// d with d + a = b, when a <= b.
  std::optional<Element> left_residual(Element b, Element a) const { return opt(left_[at(a, b)]); }

  /// Supremum / infimum of an arbitrary subset (the empty set has sup 0 and inf 1).
  std::optional<Element> supremum(const std::vector<Element>& xs) const;
  std::optional<Element> infimum(const std::vector<Element>& xs) const;

  ElementSet down_set(Element e) const;
  /// Length of the longest chain 0 < ... < e.
  int level(Element e) const { return level_.at(static_cast<std::size_t>(e)); }
  bool is_lattice() const noexcept { return lattice_; }

 private:
  friend Poset derive_order(const PeaTable& t);

  std::size_t at(Element a, Element b) const;
  static std::optional<Element> opt(Element e) {
    return e == kUndefined ? std::nullopt : std::optional<Element>(e);
  }

  std::size_t n_ = 0;
  std::vector<char> leq_;
  std::vector<Element> meet_, join_, right_, left_;
  std::vector<int> level_;
  bool lattice_ = true;
};

/// Derives the order and residuals of a table that satisfies the axioms.
/// Throws InvariantViolation if the result is not a bounded partial order.
Poset derive_order(const PeaTable& t);

}  // namespace pea
