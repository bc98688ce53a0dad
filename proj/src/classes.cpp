#include "pea/classes.hpp"

#include "pea/construct.hpp"
#include "pea/errors.hpp"
#include "pea/morphism.hpp"

#include <algorithm>
#include <array>

namespace pea {

ElementSet atoms(const Pea& e) {
  ElementSet out(e.size());
  for (Element x = 1; x < static_cast<Element>(e.size()); ++x)
    if (e.order().level(x) == 1) out.insert(x);
  return out;
}

TDSet polyatoms(const Pea& e, const CentralStructure& g) {
  const ElementSet a = atoms(e);
  TDSet t = std_generated(e, g, a);
  if (closure_sup(e, g, a & g.elements()) != (t.members & g.elements()))
    throw InvariantViolation("[A ^ Gamma] differs from [A] ^ Gamma");
  return t;
}

bool is_boolean_element(const Pea& e, Element b) {
  const Interval iv = interval_algebra(e, b);
  return center(iv.algebra).elements().count() == iv.algebra.size();
}

bool is_subcentral(const Pea& e, const CentralStructure& g, Element p) {
  const Interval iv = interval_algebra(e, p);
  ElementSet reached(e.size());
  for (Element c : g.members()) reached.insert(projection(e, g, c, p));
  const CentralStructure local = center(iv.algebra);
  for (Element d : local.members())
    if (!reached.contains(iv.embedding[static_cast<std::size_t>(d)])) return false;
  return true;
}

MonadClauses monad_clauses(const Pea& e, const CentralStructure& g, Element h) {
  const auto n = static_cast<Element>(e.size());
  std::vector<Element> below;
  for (Element x = 0; x < n; ++x)
    if (e.leq(x, h)) below.push_back(x);

  MonadClauses m;
  m.meets = std::all_of(below.begin(), below.end(), [&](Element x) { return e.meet_required(h, g.cover(x)) == x; });
  m.subcentral_boolean = is_subcentral(e, g, h) && is_boolean_element(e, h);
  m.cover_injective =
      std::all_of(below.begin(), below.end(), [&](Element x) { return g.cover(x) != g.cover(h) || x == h; });
  m.complements = std::all_of(below.begin(), below.end(), [&](Element x) {
    const auto [right, left] = e.residuals(x, h);
    const Element outside = g.complement(g.cover(x));
    return e.leq(right, outside) && e.leq(left, outside);
  });
  m.sums = true;
  for (Element x : below)
    for (Element y : below) {
      const Element s = e.sum(x, y);
      const bool exists = s != kUndefined && e.leq(s, h);
      if (exists != g.disjoint(g.cover(x), g.cover(y))) m.sums = false;
    }
  return m;
}

bool is_monad(const Pea& e, const CentralStructure& g, Element h) {
  const MonadClauses m = monad_clauses(e, g, h);
  const std::array<bool, 5> all = {m.meets, m.subcentral_boolean, m.cover_injective, m.complements, m.sums};
  if (std::adjacent_find(all.begin(), all.end(), std::not_equal_to<>()) != all.end())
    throw InvariantViolation("the five monad characterizations disagree at " + e.display(h));
  return m.meets;
}

bool is_commutative(const Pea& e) {
  const auto n = static_cast<Element>(e.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (e.sum(a, b) != e.sum(b, a)) return false;
  return true;
}

bool is_weak_commutative(const Pea& e) {
  const auto n = static_cast<Element>(e.size());
  bool symmetric = true;
  for (Element a = 0; a < n && symmetric; ++a)
    for (Element b = 0; b < n && symmetric; ++b) symmetric = e.defined(a, b) == e.defined(b, a);
  bool complements = true;
  for (Element a = 0; a < n && complements; ++a) complements = e.left_complement(a) == e.right_complement(a);
  if (symmetric != complements)
    throw InvariantViolation("weak commutativity: existence symmetry and a- = a~ disagree on " + e.name());
  return symmetric;
}

bool is_lattice_ordered(const Pea& e) { return e.order().is_lattice(); }

bool has_rip(const Pea& e) {
  const auto n = static_cast<Element>(e.size());
  for (Element a1 = 0; a1 < n; ++a1)
    for (Element a2 = 0; a2 < n; ++a2)
      for (Element b1 = 0; b1 < n; ++b1) {
        if (!e.leq(a1, b1) || !e.leq(a2, b1)) continue;
        for (Element b2 = 0; b2 < n; ++b2) {
          if (!e.leq(a1, b2) || !e.leq(a2, b2)) continue;
          bool found = false;
          for (Element c = 0; c < n && !found; ++c)
            found = e.leq(a1, c) && e.leq(a2, c) && e.leq(c, b1) && e.leq(c, b2);
          if (!found) return false;
        }
      }
  return true;
}

bool has_rdp0(const Pea& e) {
  const auto n = static_cast<Element>(e.size());
  for (Element b1 = 0; b1 < n; ++b1)
    for (Element b2 = 0; b2 < n; ++b2) {
      const Element s = e.sum(b1, b2);
      if (s == kUndefined) continue;
      for (Element a = 0; a < n; ++a) {
        if (!e.leq(a, s)) continue;
        bool found = false;
        for (Element d1 = 0; d1 < n && !found; ++d1)
          found = e.leq(d1, b1) && e.leq(d1, a) && e.leq(*e.order().right_residual(d1, a), b2);
        if (!found) return false;
      }
    }
  return true;
}

namespace {

enum class Refinement { None, Commuting, Disjoint };

// For every a1+a2 = b1+b2, looks for d1..d4 with d1+d2 = a1, d3+d4 = a2,
// d1+d3 = b1, d2+d4 = b2. Given d1, the rest is forced by cancellation.
bool riesz_decomposition(const Pea& e, Refinement extra) {
  const auto n = static_cast<Element>(e.size());
  const Poset& o = e.order();
  const auto commute_below = [&](Element p, Element q) {
    for (Element x = 0; x < n; ++x) {
      if (!e.leq(x, p)) continue;
      for (Element y = 0; y < n; ++y)
        if (e.leq(y, q) && (e.sum(x, y) == kUndefined || e.sum(x, y) != e.sum(y, x))) return false;
    }
    return true;
  };
  for (Element a1 = 0; a1 < n; ++a1)
    for (Element a2 = 0; a2 < n; ++a2) {
      const Element s = e.sum(a1, a2);
      if (s == kUndefined) continue;
      for (Element b1 = 0; b1 < n; ++b1) {
        if (!e.leq(b1, s)) continue;
        const Element b2 = *o.right_residual(b1, s);
        bool found = false;
        for (Element d1 = 0; d1 < n && !found; ++d1) {
          if (!e.leq(d1, a1) || !e.leq(d1, b1)) continue;
          const Element d2 = *o.right_residual(d1, a1);
          const Element d3 = *o.right_residual(d1, b1);
          if (!e.leq(d3, a2)) continue;
          const Element d4 = *o.right_residual(d3, a2);
          if (e.sum(d2, d4) != b2) continue;
          if (extra == Refinement::Commuting && !commute_below(d2, d3)) continue;
          if (extra == Refinement::Disjoint && !o.disjoint(d2, d3)) continue;
          found = true;
        }
        if (!found) return false;
      }
    }
  return true;
}

}  // namespace

bool has_rdp(const Pea& e) { return riesz_decomposition(e, Refinement::None); }
bool has_rdp1(const Pea& e) { return riesz_decomposition(e, Refinement::Commuting); }
bool has_rdp2(const Pea& e) { return riesz_decomposition(e, Refinement::Disjoint); }

RieszProperties riesz_properties(const Pea& e) {
  RieszProperties r{has_rip(e), has_rdp0(e), has_rdp(e), has_rdp1(e), has_rdp2(e)};
  if (r.rdp2 != (is_lattice_ordered(e) && r.rdp0))
    throw InvariantViolation("RDP2 disagrees with lattice order plus RDP0 on " + e.name());
  return r;
}

const std::vector<ClassInfo>& class_registry() {
  static const std::vector<ClassInfo> registry = [] {
    const auto always = [](const Pea&) { return true; };
    std::vector<ClassInfo> r = {
        {"atoms", ClassKind::ElementSet, "polyatoms [A]: suprema of Gamma-orthogonal families of atoms", true, "", {}},
        {"polyatoms", ClassKind::ElementSet, "polyatoms [A]", true, "atoms", {}},
        {"boolean", ClassKind::ElementSet, "boolean elements B: E[0,b] is a Boolean algebra", true, "", {}},
        {"subcentral", ClassKind::ElementSet, "subcentral elements S", false, "", {}},
        {"monad", ClassKind::ElementSet, "monads H", true, "", {}},
        {"commutative", ClassKind::StrongTypeClass, "E[0,k] is commutative (an effect algebra)", false, "",
         is_commutative},
        {"weakcomm", ClassKind::TypeClass, "E[0,k] is weak-commutative", false, "", is_weak_commutative},
        {"lattice", ClassKind::StrongTypeClass, "E[0,k] is lattice-ordered", false, "", is_lattice_ordered},
        {"rip", ClassKind::StrongTypeClass, "E[0,k] has the Riesz interpolation property", false, "", has_rip},
        {"rdp0", ClassKind::StrongTypeClass, "E[0,k] has RDP0", false, "", has_rdp0},
        {"rdp", ClassKind::StrongTypeClass, "E[0,k] has RDP", false, "", has_rdp},
        {"rdp1", ClassKind::StrongTypeClass, "E[0,k] has RDP1", false, "", has_rdp1},
        {"rdp2", ClassKind::StrongTypeClass, "E[0,k] has RDP2", false, "", has_rdp2},
        // Collapses on finite algebras.
        {"atomic", ClassKind::StrongTypeClass, "every finite PEA is atomic", false, "", always},
        {"archimedean", ClassKind::StrongTypeClass, "every finite PEA is archimedean", false, "", always},
        {"monotone-sigma-complete", ClassKind::StrongTypeClass, "every finite PEA is monotone sigma-complete", false,
         "", always},
        {"sigma-complete", ClassKind::StrongTypeClass, "finite: same as lattice-ordered", false, "lattice",
         is_lattice_ordered},
        {"sigma-rip", ClassKind::StrongTypeClass, "finite: same as rip", false, "rip", has_rip},
    };
    return r;
  }();
  return registry;
}

const ClassInfo& find_class(const std::string& name) {
  const auto& r = class_registry();
  const auto it = std::find_if(r.begin(), r.end(), [&](const ClassInfo& c) { return c.name == name; });
  if (it == r.end()) {
    std::string known;
    for (const ClassInfo& c : r) known += (known.empty() ? "" : ", ") + c.name;
    throw DomainError("unknown class '" + name + "' (known: " + known + ")");
  }
  if (!it->alias_of.empty()) return find_class(it->alias_of);
  return *it;
}

ElementSet class_members(const Pea& e, const CentralStructure& g, const std::string& name) {
  const ClassInfo& info = find_class(name);
  const auto n = static_cast<Element>(e.size());
  ElementSet out(e.size());
  if (info.kind != ClassKind::ElementSet) {
    for (Element k = 0; k < n; ++k)
      if (info.holds(interval_algebra(e, k).algebra)) out.insert(k);
    return out;
  }
  if (info.name == "atoms") return polyatoms(e, g).members;
  for (Element k = 0; k < n; ++k) {
    bool in = false;
    if (info.name == "boolean") {
      in = is_boolean_element(e, k);
    } else if (info.name == "subcentral") {
      in = is_subcentral(e, g, k);
    } else if (info.name == "monad") {
      in = is_monad(e, g, k);
    }
    if (in) out.insert(k);
  }
  return out;
}

TDSet td_from_class(const Pea& e, const CentralStructure& g, const std::string& name) {
  const ClassInfo& info = find_class(name);
  const ElementSet k = class_members(e, g, name);
  if (!is_td(e, g, k))
    throw InvariantViolation("class '" + info.name + "' gives a set that is not TD on " + e.name() + ": " +
                             e.table().format(k));
  TDSet t = make_td_set(e, g, k);
  const bool must_be_std = info.kind == ClassKind::StrongTypeClass || (info.kind == ClassKind::ElementSet && info.expect_std);
  if (must_be_std && !t.std)
    throw InvariantViolation("class '" + info.name + "' gives a set that is not STD on " + e.name() + ": " +
                             e.table().format(k));
  return t;
}

TypeClassReport verify_type_class(const std::string& name, const std::vector<PeaTable>& corpus) {
  const ClassInfo& info = find_class(name);
  if (info.kind == ClassKind::ElementSet) throw DomainError("'" + name + "' is not a class of algebras");

  TypeClassReport r;
  std::vector<Pea> members;
  for (const PeaTable& t : corpus) {
    const Pea e(t);
    const bool in = info.holds(e);
    if (in != info.holds(Pea(canonical_table(t))) && r.isomorphism) {
      r.isomorphism = false;
      r.isomorphism_failure = t.name() + " and its canonical relabelling disagree";
    }
    if (!in) continue;
    members.push_back(e);
    const CentralStructure g = center(e);
    for (Element k = 0; k < static_cast<Element>(e.size()); ++k) {
      if (info.holds(interval_algebra(e, k).algebra)) continue;
      const std::string why = t.name() + "[0," + e.display(k) + "]";
      if (g.contains(k) && r.summands) {
        r.summands = false;
        r.summand_failure = why;
      }
      if (r.intervals) {
        r.intervals = false;
        r.interval_failure = why;
      }
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size() && r.products; ++j) {
      if (members[i].size() * members[j].size() > 64) continue;
      const std::array<Pea, 2> pair = {members[i], members[j]};
      if (!info.holds(direct_product(pair).algebra)) {
        r.products = false;
        r.product_failure = members[i].name() + " x " + members[j].name();
      }
    }
  return r;
}

ClassProfile class_profile(const Pea& e, const CentralStructure& g) {
  const auto n = static_cast<Element>(e.size());
  ClassProfile p;
  const ElementSet a = atoms(e);
  const TDSet pa = polyatoms(e, g);
  for (Element k = 0; k < n; ++k) {
    const Pea sub = interval_algebra(e, k).algebra;
    ElementProfile ep;
    ep.atom = a.contains(k);
    ep.polyatom = pa.members.contains(k);
    ep.boolean = is_boolean_element(e, k);
    ep.subcentral = is_subcentral(e, g, k);
    ep.monad = is_monad(e, g, k);
    ep.commutative = is_commutative(sub);
    ep.weak_commutative = is_weak_commutative(sub);
    ep.lattice = is_lattice_ordered(sub);
    ep.riesz = riesz_properties(sub);
    p.elements.push_back(ep);
  }
  p.atomic = true;
  for (Element x = 1; x < n; ++x) {
    bool has_atom = false;
    a.for_each([&](Element y) { has_atom = has_atom || e.leq(y, x); });
    p.atomic = p.atomic && has_atom;
  }
  p.atom_free = a.empty();
  p.lattice = is_lattice_ordered(e);
  p.commutative = is_commutative(e);
  p.weak_commutative = is_weak_commutative(e);
  p.riesz = riesz_properties(e);
  return p;
}

}  // namespace pea
