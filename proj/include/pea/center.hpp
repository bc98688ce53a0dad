#pragma once

#include "pea/pea.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pea {

/// Which clause of the intrinsic characterization failed.
enum class CentralClause {
  None,     // c is central
  Split,    // some a is not a1 + a2 with a1 <= c, a2 <= c~
  Closed,   // a sum of two elements under c (or under c~) escapes it
  Commute   // x <= c, y <= c~ but x + y != y + x
};

const char* clause_name(CentralClause c);

struct CentralityVerdict {
  bool central = false;
  CentralClause clause = CentralClause::None;
  std::vector<Element> witnesses;
  std::string detail;
};

/// Decides centrality from the three intrinsic clauses alone.
CentralityVerdict check_central_clauses(const Pea& e, Element c);

/// Decides centrality from the splitting map x -> (x ^ c, x ^ c~): the meets
/// must exist, c must go to (c, 0), x must be their sum, and the map must be
/// an isomorphism onto E[0,c] x E[0,c~]. Returns why it fails, or nullopt.
std::optional<std::string> splitting_map_failure(const Pea& e, Element c);

/// Runs both decision procedures; throws InvariantViolation if they disagree.
CentralityVerdict is_central(const Pea& e, Element c);

/// The center as a Boolean algebra together with the central cover map.
class CentralStructure {
 public:
  std::size_t universe() const noexcept { return cover_.size(); }
  const ElementSet& elements() const noexcept { return members_; }
  const std::vector<Element>& members() const noexcept { return list_; }
  bool contains(Element e) const { return members_.contains(e); }

  /// Boolean operations; arguments must be central (DomainError otherwise).
  Element meet(Element c, Element d) const;
  Element join(Element c, Element d) const;
  Element complement(Element c) const;
  bool disjoint(Element c, Element d) const { return meet(c, d) == 0; }

  /// gamma e: the least central element above e.
  Element cover(Element e) const { return cover_.at(static_cast<std::size_t>(e)); }
  const std::vector<Element>& covers() const noexcept { return cover_; }

  /// Atoms of the Boolean algebra, ascending.
  const std::vector<Element>& atoms() const noexcept { return atoms_; }

  /// Join of a list of central elements (0 for the empty list).
  Element join_all(const std::vector<Element>& cs) const;

 private:
  friend CentralStructure center(const Pea& e);

  std::size_t pos(Element c) const;

  ElementSet members_;
  std::vector<Element> list_;
  std::vector<int> pos_;
  std::vector<Element> meet_, join_, complement_;
  std::vector<Element> cover_;
  std::vector<Element> atoms_;
};

/// Gamma(E). Every Boolean-algebra law is checked exhaustively on the
/// result; a failure throws InvariantViolation.
CentralStructure center(const Pea& e);

/// p_c(x) = x ^ c. Throws DomainError when c is not central.
Element projection(const Pea& e, const CentralStructure& g, Element c, Element x);

/// gamma e.
inline Element central_cover(const CentralStructure& g, Element e) { return g.cover(e); }

struct HullReport {
  bool ok = true;
  std::string failure;
};

/// gamma 0 = 0, e <= gamma e, gamma(e ^ gamma f) = gamma e ^ gamma f with the
/// meet existing, and gamma maps onto the center.
HullReport verify_hull(const Pea& e, const CentralStructure& g);

/// A family is Gamma-orthogonal iff its central covers are pairwise
/// disjoint. If pairwise disjoint central c_i dominate the e_i, then
/// gamma e_i <= c_i, so the covers are disjoint as well; conversely the
/// covers themselves are such a family.
bool gamma_orthogonal(const CentralStructure& g, const std::vector<Element>& family);

/// Sum of a Gamma-orthogonal family. Checks that it equals the supremum and
/// does not depend on the order of summation (InvariantViolation otherwise).
/// Throws DomainError when the family is not Gamma-orthogonal.
Element orthosum(const Pea& e, const CentralStructure& g, const std::vector<Element>& family);

}  // namespace pea
