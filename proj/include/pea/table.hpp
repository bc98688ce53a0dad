#pragma once

#include "pea/element_set.hpp"

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

namespace pea {

inline constexpr Element kUndefined = -1;

/// Finite partial algebra (E; +, 0, 1) stored as a dense n x n sum table.
///
/// Tables are kept in normal form: zero is index 0 and the unit is index
/// n-1 (they coincide only for the one-element algebra). A fresh table has
/// exactly the zero sums 0+x = x+0 = x defined. Nothing here checks the
/// axioms; see verify_axioms() and the validated wrapper Pea.
class PeaTable {
 public:
  PeaTable() : PeaTable(1) {}
  explicit PeaTable(std::size_t n, std::string name = {});

  using Sum = std::tuple<Element, Element, Element>;

  /// Builds a normalized table from arbitrary zero/unit indices. Indices
  /// other than zero and unit keep their relative order. Unlabelled elements
  /// receive their original index as label whenever the renumbering moves
  /// anything, so reports still name them as the input did.
  static PeaTable from_raw(std::size_t n, Element zero, Element one, const std::vector<Sum>& sums,
                           const std::vector<std::string>& labels = {}, std::string name = {});

  std::size_t size() const noexcept { return n_; }
  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return static_cast<Element>(n_) - 1; }

  Element sum(Element a, Element b) const { return cells_[index(a, b)]; }
  bool defined(Element a, Element b) const { return sum(a, b) != kUndefined; }
  void set_sum(Element a, Element b, Element c);
  void clear_sum(Element a, Element b) { cells_[index(a, b)] = kUndefined; }

  /// Row-major sum table, kUndefined where a+b does not exist.
  const std::vector<Element>& cells() const noexcept { return cells_; }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool has_labels() const noexcept;
  const std::string& label(Element e) const { return labels_.at(static_cast<std::size_t>(e)); }
  void set_label(Element e, std::string label);
  /// Label when present, decimal index otherwise.
  std::string display(Element e) const;
  /// Resolves a label first, then a decimal index; kUndefined when neither matches.
  Element find(const std::string& token) const;

  std::string format(const ElementSet& s) const;

  /// Same element count and the same sum table; names and labels ignored.
  bool same_sums(const PeaTable& other) const noexcept {
    return n_ == other.n_ && cells_ == other.cells_;
  }
  friend bool operator==(const PeaTable& a, const PeaTable& b) {
    return a.same_sums(b) && a.name_ == b.name_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t index(Element a, Element b) const;

  std::size_t n_;
  std::vector<Element> cells_;
  std::vector<std::string> labels_;
  std::string name_;
};

enum class Axiom {
  Identity,        // 0+x = x+0 = x
  Associativity,   // (i)
  Complements,     // (ii)
  Conjugates,      // (iii)
  UnitAnnihilates  // (iv)
};

const char* axiom_name(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::vector<Element> witnesses;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool violates(Axiom a) const;
};

/// Checks every instance of the defining axioms and reports each failure
/// with its witnessing elements.
AxiomReport verify_axioms(const PeaTable& t);

/// Early-exit form of verify_axioms() for search loops.
bool satisfies_axioms(const PeaTable& t);

}  // namespace pea
