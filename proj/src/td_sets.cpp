#include "pea/td_sets.hpp"

#include "pea/errors.hpp"

namespace pea {

namespace {

// Depth-first over Gamma-orthogonal subfamilies of `items`, extending only
// with later items whose cover is disjoint from the covers used so far.
void orthogonal_sums(const Pea& e, const CentralStructure& g, const std::vector<Element>& items, std::size_t from,
                     std::vector<Element>& family, Element used, ElementSet& out) {
  out.insert(orthosum(e, g, family));
  for (std::size_t i = from; i < items.size(); ++i) {
    const Element cover = g.cover(items[i]);
    if (!g.disjoint(cover, used)) continue;
    family.push_back(items[i]);
    orthogonal_sums(e, g, items, i + 1, family, g.join(used, cover), out);
    family.pop_back();
  }
}

ElementSet central_interval(const Pea& e, const CentralStructure& g, Element c) {
  ElementSet out(e.size());
  for (Element d : g.members())
    if (e.leq(d, c)) out.insert(d);
  return out;
}

}  // namespace

ElementSet closure_sup(const Pea& e, const CentralStructure& g, const ElementSet& q) {
  std::vector<Element> items;
  q.for_each([&](Element x) {
    if (x != 0) items.push_back(x);
  });
  ElementSet out(e.size());
  std::vector<Element> family;
  orthogonal_sums(e, g, items, 0, family, 0, out);
  return out;
}

ElementSet closure_gamma(const Pea& e, const CentralStructure& g, const ElementSet& q) {
  ElementSet out(e.size());
  q.for_each([&](Element x) {
    for (Element c : g.members()) out.insert(projection(e, g, c, x));
  });
  return out;
}

ElementSet closure_down(const Pea& e, const ElementSet& q) {
  ElementSet out(e.size());
  q.for_each([&](Element x) { out |= e.order().down_set(x); });
  return out;
}

ElementSet commutant(const Pea& e, const ElementSet& q) {
  ElementSet out(e.size());
  const std::vector<Element> qs = q.members();
  for (Element x = 0; x < static_cast<Element>(e.size()); ++x) {
    bool ok = true;
    for (Element y : qs) ok = ok && e.order().disjoint(x, y);
    if (ok) out.insert(x);
  }
  return out;
}

ElementSet bicommutant(const Pea& e, const ElementSet& q) { return commutant(e, commutant(e, q)); }

bool is_td(const Pea& e, const CentralStructure& g, const ElementSet& k) {
  return closure_sup(e, g, k) == k && closure_gamma(e, g, k) == k;
}

bool is_std(const Pea& e, const CentralStructure& g, const ElementSet& k) {
  return closure_sup(e, g, k) == k && closure_down(e, k) == k;
}

TDSet make_td_set(const Pea& e, const CentralStructure& g, const ElementSet& k) {
  if (!is_td(e, g, k)) throw DomainError("set " + e.table().format(k) + " is not type-determining");
  TDSet t;
  t.members = k;
  t.td = true;
  t.std = is_std(e, g, k);

  ElementSet covers(e.size());
  k.for_each([&](Element x) { covers.insert(g.cover(x)); });
  t.type_cover = g.join_all(covers.members());
  if (covers != central_interval(e, g, t.type_cover))
    throw InvariantViolation("gamma K is not the central interval below c_K for K = " + e.table().format(k));

  const ElementSet restricted = k & covers;
  if (restricted != (k & g.elements()))
    throw InvariantViolation("K ^ gamma K differs from K ^ Gamma for K = " + e.table().format(k));
  t.restricted_type_cover = g.join_all(restricted.members());
  if (restricted != central_interval(e, g, t.restricted_type_cover))
    throw InvariantViolation("K ^ gamma K is not a central interval for K = " + e.table().format(k));
  return t;
}

TDSet td_generated(const Pea& e, const CentralStructure& g, const ElementSet& q) {
  return make_td_set(e, g, closure_sup(e, g, closure_gamma(e, g, q)));
}

TDSet std_generated(const Pea& e, const CentralStructure& g, const ElementSet& q) {
  TDSet t = make_td_set(e, g, closure_sup(e, g, closure_down(e, q)));
  if (!t.std) throw InvariantViolation("[Q^down] is not STD for Q = " + e.table().format(q));
  return t;
}

CentralKind classify_central(const Pea& e, const CentralStructure& g, const TDSet& k, Element c) {
  if (!g.contains(c)) throw DomainError(e.display(c) + " is not central");
  const auto n = static_cast<Element>(e.size());

  ElementSet gamma_k(e.size());
  k.members.for_each([&](Element x) { gamma_k.insert(g.cover(x)); });

  CentralKind literal;
  literal.type_k = k.members.contains(c);
  literal.locally_type_k = gamma_k.contains(c);
  literal.purely_non_k = true;
  for (Element x = 1; x < n; ++x)
    if (e.leq(x, c) && k.members.contains(x)) literal.purely_non_k = false;
  literal.properly_non_k = true;
  for (Element d : g.members())
    if (d != 0 && e.leq(d, c) && k.members.contains(d)) literal.properly_non_k = false;

  CentralKind ordered;
  ordered.type_k = e.leq(c, k.restricted_type_cover);
  ordered.locally_type_k = e.leq(c, k.type_cover);
  ordered.purely_non_k = e.leq(c, g.complement(k.type_cover));
  ordered.properly_non_k = e.leq(c, g.complement(k.restricted_type_cover));

  const std::string where = " for " + e.display(c) + " and K = " + e.table().format(k.members);
  if (!(literal == ordered)) throw InvariantViolation("membership and cover classifications disagree" + where);

  // Every nonzero central summand below c contains a nonzero member of K.
  bool summands = true;
  for (Element d : g.members()) {
    if (d == 0 || !e.leq(d, c)) continue;
    bool found = false;
    for (Element x = 1; x < n && !found; ++x) found = e.leq(x, d) && k.members.contains(x);
    summands = summands && found;
  }
  if (summands != literal.locally_type_k) throw InvariantViolation("summand test for locally type-K disagrees" + where);

  if (k.std) {
    const bool inside = e.order().down_set(c).is_subset_of(k.members);
    if (inside != literal.type_k) throw InvariantViolation("E[0,c] inside K disagrees with type-K" + where);
  }
  return literal;
}

}  // namespace pea
