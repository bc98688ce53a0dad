#pragma once

#include "pea/center.hpp"
#include "pea/td_sets.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pea {

/// Minimal nonzero elements.
ElementSet atoms(const Pea& e);

/// [A], the STD set generated by the atoms. Also checks that the polyatoms
/// that are central are exactly [A ^ Gamma].
TDSet polyatoms(const Pea& e, const CentralStructure& g);

/// E[0,b] is a Boolean algebra: its center is all of it.
bool is_boolean_element(const Pea& e, Element b);

/// Every central element of E[0,p] has the form p ^ c with c central in E.
bool is_subcentral(const Pea& e, const CentralStructure& g, Element p);

struct MonadClauses {
  bool meets = false;           // e = h ^ gamma e for all e <= h
  bool subcentral_boolean = false;
  bool cover_injective = false;  // gamma e = gamma h, e <= h  =>  e = h
  bool complements = false;      // both complements of e in E[0,h] lie below (gamma e)'
  bool sums = false;             // e +_h f exists iff gamma e ^ gamma f = 0
};

MonadClauses monad_clauses(const Pea& e, const CentralStructure& g, Element h);

/// Evaluates all five characterizations and throws InvariantViolation
/// unless they agree.
bool is_monad(const Pea& e, const CentralStructure& g, Element h);

bool is_commutative(const Pea& e);

/// a+b exists iff b+a exists; cross-checked against a- = a~ for every a.
bool is_weak_commutative(const Pea& e);

bool is_lattice_ordered(const Pea& e);

struct RieszProperties {
  bool rip = false;
  bool rdp0 = false;
  bool rdp = false;
  bool rdp1 = false;
  bool rdp2 = false;

  friend bool operator==(const RieszProperties&, const RieszProperties&) = default;
};

/// Each property by exhaustive search over the carrier. RDP2 is also
/// checked against "lattice-ordered and RDP0" (InvariantViolation on
/// disagreement).
RieszProperties riesz_properties(const Pea& e);

bool has_rip(const Pea& e);
bool has_rdp0(const Pea& e);
bool has_rdp(const Pea& e);
bool has_rdp1(const Pea& e);
bool has_rdp2(const Pea& e);

enum class ClassKind {
  ElementSet,      // defined on elements directly (atoms, monads, ...)
  TypeClass,       // K = {k : E[0,k] in the class}; TD
  StrongTypeClass  // as above and closed under all intervals; STD
};

struct ClassInfo {
  std::string name;
  ClassKind kind;
  std::string description;
  /// For element-set entries: whether the set is expected to be STD.
  bool expect_std = false;
  /// Non-empty when the entry collapses to another one on finite algebras.
  std::string alias_of;
  /// Algebra predicate for type-class entries.
  std::function<bool(const Pea&)> holds;
};

const std::vector<ClassInfo>& class_registry();

/// Throws DomainError for unknown names. Aliases are resolved.
const ClassInfo& find_class(const std::string& name);

/// The members of the named class: for type-class entries the k with
/// E[0,k] in the class.
ElementSet class_members(const Pea& e, const CentralStructure& g, const std::string& name);

/// class_members as a TD set. Throws InvariantViolation when the set is
/// not TD, or not STD although the registry says it must be.
TDSet td_from_class(const Pea& e, const CentralStructure& g, const std::string& name);

struct TypeClassReport {
  bool summands = true;    // central intervals of members stay in the class
  bool intervals = true;   // every interval of a member stays in the class
  bool products = true;    // binary products of members stay in the class
  bool isomorphism = true; // canonical relabellings agree with the original
  std::string summand_failure, interval_failure, product_failure, isomorphism_failure;

  bool type_class() const { return summands && products && isomorphism; }
  bool strong() const { return type_class() && intervals; }
};

/// Desk-scale check of the type-class axioms over a corpus. Only defined
/// for type-class registry entries (DomainError otherwise).
TypeClassReport verify_type_class(const std::string& name, const std::vector<PeaTable>& corpus);

struct ElementProfile {
  bool atom = false, polyatom = false, boolean = false, subcentral = false, monad = false;
  bool commutative = false, weak_commutative = false, lattice = false;
  RieszProperties riesz;
};

struct ClassProfile {
  std::vector<ElementProfile> elements;
  bool atomic = false, atom_free = false, lattice = false, commutative = false, weak_commutative = false;
  RieszProperties riesz;
};

ClassProfile class_profile(const Pea& e, const CentralStructure& g);

}  // namespace pea
