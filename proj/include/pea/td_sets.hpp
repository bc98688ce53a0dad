#pragma once

#include "pea/center.hpp"
#include "pea/element_set.hpp"
#include "pea/pea.hpp"

namespace pea {

/// [Q]: suprema of all Gamma-orthogonal subfamilies of Q. The empty family
/// contributes 0, so [Q] always contains 0 and [{}] = {0}.
ElementSet closure_sup(const Pea& e, const CentralStructure& g, const ElementSet& q);

/// Q^gamma = { q ^ c : q in Q, c central }.
ElementSet closure_gamma(const Pea& e, const CentralStructure& g, const ElementSet& q);

/// Q^down = union of E[0,q] over q in Q.
ElementSet closure_down(const Pea& e, const ElementSet& q);

/// Q' = { x : x and q are disjoint for every q in Q }. Disjoint means that 0
/// is the only common lower bound, so a missing meet simply fails the test.
ElementSet commutant(const Pea& e, const ElementSet& q);
ElementSet bicommutant(const Pea& e, const ElementSet& q);

bool is_td(const Pea& e, const CentralStructure& g, const ElementSet& k);
bool is_std(const Pea& e, const CentralStructure& g, const ElementSet& k);

struct TDSet {
  ElementSet members;
  bool td = false;
  bool std = false;
  Element type_cover = 0;             // c_K
  Element restricted_type_cover = 0;  // c_{K ^ gamma K}
};

/// Wraps a TD set with its covers. c_K is the join of the central covers
/// of K and is checked to satisfy gamma K = Gamma[0, c_K]; likewise for
/// K ^ gamma K = K ^ Gamma. Throws DomainError when K is not TD.
TDSet make_td_set(const Pea& e, const CentralStructure& g, const ElementSet& k);

/// [Q^gamma], the least TD set containing Q.
TDSet td_generated(const Pea& e, const CentralStructure& g, const ElementSet& q);
/// [Q^down], the least STD set containing Q.
TDSet std_generated(const Pea& e, const CentralStructure& g, const ElementSet& q);

struct CentralKind {
  bool type_k = false;
  bool locally_type_k = false;
  bool purely_non_k = false;
  bool properly_non_k = false;

  friend bool operator==(const CentralKind&, const CentralKind&) = default;
};

/// Classifies a central c against K twice, once from the membership
/// conditions and once by comparing c with c_K, c_{K ^ gamma K} and their
/// complements; also checks the summand form of "locally type-K" and, for
/// STD K, that type-K means E[0,c] lies inside K. Any disagreement throws
/// InvariantViolation. DomainError when c is not central.
CentralKind classify_central(const Pea& e, const CentralStructure& g, const TDSet& k, Element c);

}  // namespace pea
