#include "pea/decomposition.hpp"

#include "pea/errors.hpp"

#include <functional>

namespace pea {

const char* mode_name(DecompositionMode m) {
  switch (m) {
    case DecompositionMode::Three: return "three";
    case DecompositionMode::Six: return "six";
    case DecompositionMode::Roman: return "roman";
  }
  return "?";
}

ProductWitness phi_isomorphism(const Pea& e, const CentralStructure& g, const std::vector<Element>& partition) {
  if (partition.empty()) throw DomainError("a central partition needs at least one element");
  for (Element c : partition)
    if (c < 0 || static_cast<std::size_t>(c) >= e.size() || !g.contains(c))
      throw DomainError("partition element " + std::to_string(c) + " is not central");
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (std::size_t j = i + 1; j < partition.size(); ++j)
      if (!g.disjoint(partition[i], partition[j]))
        throw DomainError("partition elements " + e.display(partition[i]) + " and " + e.display(partition[j]) +
                          " are not disjoint");
  if (ordered_sum(e.table(), partition) != e.one()) throw DomainError("partition does not sum to 1");

  std::vector<Interval> factors;
  std::vector<Pea> algebras;
  for (Element c : partition) {
    factors.push_back(interval_algebra(e, c));
    algebras.push_back(factors.back().algebra);
  }
  Product product = direct_product(algebras);

  const std::size_t m = product.algebra.size();
  std::vector<Element> phi(m);
  std::vector<Element> parent(partition.size());
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t i = 0; i < partition.size(); ++i)
      parent[i] = factors[i].embedding[static_cast<std::size_t>(product.projections[i][x])];
    phi[x] = ordered_sum(e.table(), parent);
    if (phi[x] == kUndefined) throw InvariantViolation("the sum of a product tuple does not exist");
  }

  std::vector<Element> coords(partition.size());
  for (Element x = 0; x < static_cast<Element>(e.size()); ++x) {
    for (std::size_t i = 0; i < partition.size(); ++i)
      coords[i] = factors[i].local(projection(e, g, partition[i], x));
    const Element back = product.encode(coords);
    if (phi[static_cast<std::size_t>(back)] != x)
      throw InvariantViolation("e -> (e ^ c_i) is not inverse to the sum map at " + e.display(x));
  }

  MorphismWitness w{std::move(phi), MorphismKind::Isomorphism};
  if (!verify_witness(product.algebra.table(), e.table(), w))
    throw InvariantViolation("the sum map of a central partition is not an isomorphism");
  return ProductWitness{std::move(factors), std::move(product), std::move(w)};
}

std::vector<std::vector<Element>> central_partitions(const Pea& e, const CentralStructure& g, Element top,
                                                     std::size_t slots) {
  std::vector<Element> atoms;
  for (Element a : g.atoms())
    if (e.leq(a, top)) atoms.push_back(a);
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> slot(atoms.size(), 0);
  while (true) {
    std::vector<Element> parts(slots, 0);
    for (std::size_t i = 0; i < atoms.size(); ++i) parts[slot[i]] = g.join(parts[slot[i]], atoms[i]);
    out.push_back(std::move(parts));
    std::size_t i = 0;
    for (; i < slot.size(); ++i) {
      if (++slot[i] < slots) break;
      slot[i] = 0;
    }
    if (i == slot.size()) break;
  }
  return out;
}

namespace {

struct Role {
  const char* name;
  const char* description;
  std::function<bool(const CentralKind& k, const CentralKind& f)> holds;
};

void require_td(const Pea& e, const CentralStructure& g, const TDSet& k, const std::string& name) {
  if (!k.td || !is_td(e, g, k.members)) throw DomainError(name + " is not type-determining");
}

DecompositionPart make_part(const Pea& e, const Role& role, Element c) {
  return DecompositionPart{role.name, c, role.description, interval_algebra(e, c)};
}

// Checks that the computed parts carry their roles and that no other central
// partition of `top` does.
std::size_t check_roles(const Pea& e, const CentralStructure& g, const TDSet& k, const TDSet& f,
                        const std::vector<Role>& roles, const std::vector<Element>& computed, Element top) {
  const auto satisfies = [&](const std::vector<Element>& parts) {
    for (std::size_t i = 0; i < roles.size(); ++i)
      if (!roles[i].holds(classify_central(e, g, k, parts[i]), classify_central(e, g, f, parts[i]))) return false;
    return true;
  };
  if (!satisfies(computed)) throw InvariantViolation("a computed decomposition part does not have its stated type");

  const auto candidates = central_partitions(e, g, top, roles.size());
  for (const auto& parts : candidates)
    if (parts != computed && satisfies(parts))
      throw InvariantViolation("decomposition is not unique: another central partition has the same types");
  return candidates.size();
}

DecompositionReport assemble(const Pea& e, const CentralStructure& g, const TDSet& k, const TDSet& f,
                             DecompositionMode mode, const std::vector<Role>& roles,
                             const std::vector<Element>& centers, const std::string& k_name,
                             const std::string& f_name) {
  DecompositionReport r;
  r.mode = mode;
  r.k_name = k_name;
  r.f_name = f_name;
  for (std::size_t i = 0; i < roles.size(); ++i) r.parts.push_back(make_part(e, roles[i], centers[i]));
  r.witness = phi_isomorphism(e, g, centers);
  r.partitions_checked = check_roles(e, g, k, f, roles, centers, e.one());
  return r;
}

}  // namespace

DecompositionReport decompose_three(const Pea& e, const CentralStructure& g, const TDSet& k,
                                    const std::string& k_name) {
  require_td(e, g, k, k_name);
  const Element c1 = k.restricted_type_cover;
  const Element c2 = g.meet(k.type_cover, g.complement(c1));
  const Element c3 = g.complement(k.type_cover);
  const std::vector<Role> roles = {
      {"c1", "type-K", [](const CentralKind& kk, const CentralKind&) { return kk.type_k; }},
      {"c2", "locally type-K, properly non-K",
       [](const CentralKind& kk, const CentralKind&) { return kk.locally_type_k && kk.properly_non_k; }},
      {"c3", "purely non-K", [](const CentralKind& kk, const CentralKind&) { return kk.purely_non_k; }},
  };
  return assemble(e, g, k, k, DecompositionMode::Three, roles, {c1, c2, c3}, k_name, k_name);
}

namespace {

struct SixParts {
  Element c11, c21, c22, c31, c32, c33;
};

SixParts six_parts(const CentralStructure& g, const TDSet& k, const TDSet& f) {
  const Element c[3] = {k.restricted_type_cover, g.meet(k.type_cover, g.complement(k.restricted_type_cover)),
                        g.complement(k.type_cover)};
  const Element d[3] = {f.restricted_type_cover, g.meet(f.type_cover, g.complement(f.restricted_type_cover)),
                        g.complement(f.type_cover)};
  if (g.meet(c[0], d[1]) != 0 || g.meet(c[0], d[2]) != 0 || g.meet(c[1], d[2]) != 0)
    throw InvariantViolation("c12, c13 or c23 is nonzero");
  SixParts s{g.meet(c[0], d[0]), g.meet(c[1], d[0]), g.meet(c[1], d[1]),
             g.meet(c[2], d[0]), g.meet(c[2], d[1]), g.meet(c[2], d[2])};
  if (s.c11 != c[0] || s.c33 != d[2]) throw InvariantViolation("c11 != c1 or c33 != d3");
  return s;
}

void require_nested(const Pea& e, const TDSet& k, const TDSet& f, const std::string& k_name,
                    const std::string& f_name) {
  if (!k.members.is_subset_of(f.members))
    throw DomainError(k_name + " is not contained in " + f_name + " (" + e.table().format(k.members) + " vs " +
                      e.table().format(f.members) + ")");
}

}  // namespace

DecompositionReport decompose_six(const Pea& e, const CentralStructure& g, const TDSet& k, const TDSet& f,
                                  const std::string& k_name, const std::string& f_name) {
  require_td(e, g, k, k_name);
  require_td(e, g, f, f_name);
  require_nested(e, k, f, k_name, f_name);
  const SixParts s = six_parts(g, k, f);
  using K = const CentralKind&;
  const std::vector<Role> roles = {
      {"c11", "type-K", [](K kk, K) { return kk.type_k; }},
      {"c21", "type-F, locally type-K, properly non-K",
       [](K kk, K ff) { return ff.type_k && kk.locally_type_k && kk.properly_non_k; }},
      {"c22", "locally type-K, properly non-F", [](K kk, K ff) { return kk.locally_type_k && ff.properly_non_k; }},
      {"c31", "type-F, purely non-K", [](K kk, K ff) { return ff.type_k && kk.purely_non_k; }},
      {"c32", "locally type-F, properly non-F, purely non-K",
       [](K kk, K ff) { return ff.locally_type_k && ff.properly_non_k && kk.purely_non_k; }},
      {"c33", "purely non-F", [](K, K ff) { return ff.purely_non_k; }},
  };
  return assemble(e, g, k, f, DecompositionMode::Six, roles, {s.c11, s.c21, s.c22, s.c31, s.c32, s.c33}, k_name,
                  f_name);
}

DecompositionReport decompose_I_II_III(const Pea& e, const CentralStructure& g, const TDSet& k, const TDSet& f,
                                       const std::string& k_name, const std::string& f_name) {
  require_td(e, g, k, k_name);
  require_td(e, g, f, f_name);
  require_nested(e, k, f, k_name, f_name);

  using K = const CentralKind&;
  const auto type_one = [](K kk, K) { return kk.locally_type_k; };
  const auto type_two = [](K kk, K ff) { return ff.locally_type_k && kk.purely_non_k; };
  const std::vector<Role> roles = {
      {"I", "type I: locally type-K", type_one},
      {"II", "type II: locally type-F, purely non-K", type_two},
      {"III", "type III: purely non-F", [](K, K ff) { return ff.purely_non_k; }},
  };
  const Element c_one = k.type_cover;
  const Element c_two = g.meet(f.type_cover, g.complement(k.type_cover));
  const Element c_three = g.complement(f.type_cover);
  DecompositionReport r =
      assemble(e, g, k, f, DecompositionMode::Roman, roles, {c_one, c_two, c_three}, k_name, f_name);

  const SixParts s = six_parts(g, k, f);
  if (g.join(g.join(s.c11, s.c21), s.c22) != c_one || g.join(s.c31, s.c32) != c_two || s.c33 != c_three)
    throw InvariantViolation("type I/II/III parts are not the unions of the six-part summands");

  const std::vector<Role> first = {
      {"I_F", "type I, type-F", [=](K kk, K ff) { return type_one(kk, ff) && ff.type_k; }},
      {"I_notF", "type I, properly non-F", [=](K kk, K ff) { return type_one(kk, ff) && ff.properly_non_k; }},
  };
  const std::vector<Role> second = {
      {"II_F", "type II, type-F", [=](K kk, K ff) { return type_two(kk, ff) && ff.type_k; }},
      {"II_notF", "type II, properly non-F", [=](K kk, K ff) { return type_two(kk, ff) && ff.properly_non_k; }},
  };
  const std::vector<Element> split_one = {g.join(s.c11, s.c21), s.c22};
  const std::vector<Element> split_two = {s.c31, s.c32};
  r.partitions_checked += check_roles(e, g, k, f, first, split_one, c_one);
  r.partitions_checked += check_roles(e, g, k, f, second, split_two, c_two);
  for (std::size_t i = 0; i < 2; ++i) r.refinements.push_back(make_part(e, first[i], split_one[i]));
  for (std::size_t i = 0; i < 2; ++i) r.refinements.push_back(make_part(e, second[i], split_two[i]));
  return r;
}

}  // namespace pea
