#pragma once

#include "pea/order.hpp"
#include "pea/table.hpp"

#include <string>
#include <utility>

namespace pea {

/// A sum table that has passed verify_axioms(), together with its order.
/// Immutable after construction.
class Pea {
 public:
  /// The one-element algebra.
  Pea() : Pea(PeaTable(1)) {}
  /// Throws DomainError listing the violated axioms when `t` is not a PEA.
  explicit Pea(PeaTable t);

  const PeaTable& table() const noexcept { return table_; }
  const Poset& order() const noexcept { return order_; }

  std::size_t size() const noexcept { return table_.size(); }
  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return table_.one(); }
  const std::string& name() const noexcept { return table_.name(); }
  std::string display(Element e) const { return table_.display(e); }

  Element sum(Element a, Element b) const { return table_.sum(a, b); }
  bool defined(Element a, Element b) const { return table_.defined(a, b); }
  bool leq(Element a, Element b) const { return order_.leq(a, b); }

  /// (a/b, b\a): the unique c, d with a+c = b and d+a = b. Throws DomainError
  /// when a is not below b.
  std::pair<Element, Element> residuals(Element a, Element b) const;
  /// x~ = x/1, the right complement: x + x~ = 1.
  Element right_complement(Element x) const;
  /// x- = 1\x, the left complement: x- + x = 1.
  Element left_complement(Element x) const;

  /// Meet that must exist; throws InvariantViolation otherwise.
  Element meet_required(Element a, Element b) const;

  bool is_degenerate() const noexcept { return size() == 1; }

 private:
  PeaTable table_;
  Poset order_;
};

/// Left-to-right orthosum x1 + x2 + ... + xn; kUndefined if any partial sum
/// fails to exist. The empty sum is 0.
Element ordered_sum(const PeaTable& t, const std::vector<Element>& xs);

}  // namespace pea
