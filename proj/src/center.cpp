#include "pea/center.hpp"

#include "pea/errors.hpp"

#include <algorithm>

namespace pea {

const char* clause_name(CentralClause c) {
  switch (c) {
    case CentralClause::None: return "none";
    case CentralClause::Split: return "(i) splitting";
    case CentralClause::Closed: return "(ii) closure under sums";
    case CentralClause::Commute: return "(iii) commutation";
  }
  return "?";
}

CentralityVerdict check_central_clauses(const Pea& e, Element c) {
  const auto n = static_cast<Element>(e.size());
  const Element ct = e.right_complement(c);
  CentralityVerdict v;

  // (i) every a splits; a1 ranges over the lower bounds of a and c, and the
  // only candidate partner is the right residual a1/a.
  for (Element a = 0; a < n; ++a) {
    bool split = false;
    for (Element a1 = 0; a1 < n && !split; ++a1) {
      if (!e.leq(a1, c) || !e.leq(a1, a)) continue;
      const Element a2 = *e.order().right_residual(a1, a);
      split = e.leq(a2, ct);
    }
    if (!split) {
      v.clause = CentralClause::Split;
      v.witnesses = {a};
      v.detail = e.display(a) + " has no splitting under " + e.display(c) + " and " + e.display(ct);
      return v;
    }
  }

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element s = e.sum(x, y);
      if (s == kUndefined) continue;
      for (const Element bound : {c, ct})
        if (e.leq(x, bound) && e.leq(y, bound) && !e.leq(s, bound)) {
          v.clause = CentralClause::Closed;
          v.witnesses = {x, y};
          v.detail = e.display(x) + "+" + e.display(y) + " is not below " + e.display(bound);
          return v;
        }
    }

  for (Element x = 0; x < n; ++x) {
    if (!e.leq(x, c)) continue;
    for (Element y = 0; y < n; ++y)
      if (e.leq(y, ct) && e.sum(x, y) != e.sum(y, x)) {
        v.clause = CentralClause::Commute;
        v.witnesses = {x, y};
        v.detail = e.display(x) + "+" + e.display(y) + " differs from " + e.display(y) + "+" + e.display(x);
        return v;
      }
  }

  v.central = true;
  return v;
}

std::optional<std::string> splitting_map_failure(const Pea& e, Element c) {
  const auto n = static_cast<Element>(e.size());
  const Element ct = e.right_complement(c);

  std::vector<Element> first(e.size()), second(e.size());
  for (Element x = 0; x < n; ++x) {
    const auto m1 = e.order().meet(x, c), m2 = e.order().meet(x, ct);
    if (!m1 || !m2) return e.display(x) + " has no meet with " + e.display(!m1 ? c : ct);
    first[static_cast<std::size_t>(x)] = *m1;
    second[static_cast<std::size_t>(x)] = *m2;
    if (e.sum(*m1, *m2) != x) return e.display(x) + " is not the sum of its two components";
  }
  if (first[static_cast<std::size_t>(c)] != c || second[static_cast<std::size_t>(c)] != 0)
    return "the map does not send " + e.display(c) + " to (" + e.display(c) + ",0)";

  // Bijectivity onto E[0,c] x E[0,c~].
  std::vector<char> hit(e.size() * e.size(), 0);
  std::size_t targets = 0;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) targets += e.leq(a, c) && e.leq(b, ct);
  if (targets != e.size()) return "E[0,c] x E[0,c~] has the wrong size";
  for (Element x = 0; x < n; ++x) {
    char& h = hit[static_cast<std::size_t>(first[static_cast<std::size_t>(x)] * n + second[static_cast<std::size_t>(x)])];
    if (h) return "the map is not injective";
    h = 1;
  }

  // Sums: x+y exists iff both coordinate sums exist inside their intervals,
  // and then the components add.
  const auto local_sum = [&](Element a, Element b, Element top) {
    const Element s = e.sum(a, b);
    return s != kUndefined && e.leq(s, top) ? s : kUndefined;
  };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const std::size_t i = static_cast<std::size_t>(x), j = static_cast<std::size_t>(y);
      const Element s1 = local_sum(first[i], first[j], c);
      const Element s2 = local_sum(second[i], second[j], ct);
      const Element s = e.sum(x, y);
      const bool product_defined = s1 != kUndefined && s2 != kUndefined;
      if ((s != kUndefined) != product_defined)
        return "existence of " + e.display(x) + "+" + e.display(y) + " is not preserved";
      if (s != kUndefined &&
          (first[static_cast<std::size_t>(s)] != s1 || second[static_cast<std::size_t>(s)] != s2))
        return "the map is not additive on " + e.display(x) + "+" + e.display(y);
    }
  return std::nullopt;
}

CentralityVerdict is_central(const Pea& e, Element c) {
  if (c < 0 || static_cast<std::size_t>(c) >= e.size()) throw DomainError("element out of range");
  CentralityVerdict v = check_central_clauses(e, c);
  const auto failure = splitting_map_failure(e, c);
  if (v.central != !failure.has_value())
    throw InvariantViolation("centrality of " + e.display(c) + ": intrinsic clauses say " +
                             (v.central ? "central" : "not central") + " but the splitting map " +
                             (failure ? "fails: " + *failure : "is an isomorphism"));
  return v;
}

std::size_t CentralStructure::pos(Element c) const {
  if (c < 0 || static_cast<std::size_t>(c) >= pos_.size() || pos_[static_cast<std::size_t>(c)] < 0)
    throw DomainError("element " + std::to_string(c) + " is not central");
  return static_cast<std::size_t>(pos_[static_cast<std::size_t>(c)]);
}

Element CentralStructure::meet(Element c, Element d) const { return meet_[pos(c) * list_.size() + pos(d)]; }
Element CentralStructure::join(Element c, Element d) const { return join_[pos(c) * list_.size() + pos(d)]; }
Element CentralStructure::complement(Element c) const { return complement_[pos(c)]; }

Element CentralStructure::join_all(const std::vector<Element>& cs) const {
  Element acc = 0;
  for (Element c : cs) acc = join(acc, c);
  return acc;
}

namespace {

void require(bool ok, const std::string& law) {
  if (!ok) throw InvariantViolation("center fails the Boolean law " + law);
}

void check_boolean_laws(const CentralStructure& g, Element one) {
  const auto& cs = g.members();
  for (Element a : cs) {
    require(g.meet(a, g.complement(a)) == 0, "a ^ a' = 0");
    require(g.join(a, g.complement(a)) == one, "a v a' = 1");
    require(g.complement(g.complement(a)) == a, "a'' = a");
    require(g.meet(a, one) == a && g.join(a, 0) == a, "identities");
    require(g.meet(a, a) == a && g.join(a, a) == a, "idempotence");
    for (Element b : cs) {
      require(g.meet(a, b) == g.meet(b, a) && g.join(a, b) == g.join(b, a), "commutativity");
      require(g.meet(a, g.join(a, b)) == a && g.join(a, g.meet(a, b)) == a, "absorption");
      require(g.complement(g.meet(a, b)) == g.join(g.complement(a), g.complement(b)), "De Morgan");
      for (Element c : cs) {
        require(g.meet(a, g.meet(b, c)) == g.meet(g.meet(a, b), c), "associativity of ^");
        require(g.join(a, g.join(b, c)) == g.join(g.join(a, b), c), "associativity of v");
        require(g.meet(a, g.join(b, c)) == g.join(g.meet(a, b), g.meet(a, c)), "distributivity");
      }
    }
  }
}

}  // namespace

CentralStructure center(const Pea& e) {
  const auto n = static_cast<Element>(e.size());
  CentralStructure g;
  g.members_ = ElementSet(e.size());
  g.pos_.assign(e.size(), -1);
  for (Element x = 0; x < n; ++x)
    if (is_central(e, x).central) {
      g.pos_[static_cast<std::size_t>(x)] = static_cast<int>(g.list_.size());
      g.list_.push_back(x);
      g.members_.insert(x);
    }
  if (!g.contains(0) || !g.contains(e.one())) throw InvariantViolation("0 or 1 is not central");

  const std::size_t k = g.list_.size();
  g.meet_.resize(k * k);
  g.join_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto m = e.order().meet(g.list_[i], g.list_[j]);
      const auto v = e.order().join(g.list_[i], g.list_[j]);
      if (!m || !v || !g.contains(*m) || !g.contains(*v))
        throw InvariantViolation("meet or join of central " + e.display(g.list_[i]) + ", " + e.display(g.list_[j]) +
                                 " is missing or not central");
      g.meet_[i * k + j] = *m;
      g.join_[i * k + j] = *v;
    }
  for (Element c : g.list_) {
    const Element ct = e.right_complement(c);
    if (ct != e.left_complement(c) || !g.contains(ct))
      throw InvariantViolation("central " + e.display(c) + " has unequal or non-central complements");
    g.complement_.push_back(ct);
  }
  check_boolean_laws(g, e.one());

  for (Element c : g.list_)
    if (c != 0 && std::none_of(g.list_.begin(), g.list_.end(), [&](Element d) { return d != 0 && d != c && e.leq(d, c); }))
      g.atoms_.push_back(c);

  g.cover_.assign(e.size(), kUndefined);
  for (Element x = 0; x < n; ++x) {
    Element best = kUndefined;
    for (Element c : g.list_)
      if (e.leq(x, c) && (best == kUndefined || e.leq(c, best))) best = c;
    for (Element c : g.list_)
      if (e.leq(x, c) && !e.leq(best, c))
        throw InvariantViolation("no least central element above " + e.display(x));
    g.cover_[static_cast<std::size_t>(x)] = best;
  }
  return g;
}

Element projection(const Pea& e, const CentralStructure& g, Element c, Element x) {
  if (!g.contains(c)) throw DomainError(e.display(c) + " is not central");
  return e.meet_required(x, c);
}

HullReport verify_hull(const Pea& e, const CentralStructure& g) {
  const auto n = static_cast<Element>(e.size());
  const auto fail = [](std::string why) { return HullReport{false, std::move(why)}; };
  if (g.cover(0) != 0) return fail("gamma 0 != 0");
  for (Element x = 0; x < n; ++x)
    if (!e.leq(x, g.cover(x))) return fail(e.display(x) + " is not below its cover");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto m = e.order().meet(x, g.cover(y));
      if (!m) return fail(e.display(x) + " ^ gamma " + e.display(y) + " does not exist");
      if (g.cover(*m) != g.meet(g.cover(x), g.cover(y)))
        return fail("gamma(" + e.display(x) + " ^ gamma " + e.display(y) + ") != gamma " + e.display(x) +
                    " ^ gamma " + e.display(y));
    }
  for (Element c : g.members())
    if (g.cover(c) != c) return fail("gamma does not fix central " + e.display(c));
  return {};
}

bool gamma_orthogonal(const CentralStructure& g, const std::vector<Element>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!g.disjoint(g.cover(family[i]), g.cover(family[j]))) return false;
  return true;
}

Element orthosum(const Pea& e, const CentralStructure& g, const std::vector<Element>& family) {
  if (!gamma_orthogonal(g, family)) throw DomainError("family is not Gamma-orthogonal");
  const Element s = ordered_sum(e.table(), family);
  if (s == kUndefined) throw InvariantViolation("a Gamma-orthogonal family has no orthosum");
  if (e.order().supremum(family) != s) throw InvariantViolation("orthosum differs from the supremum");

  // Zeros do not move the sum; permute only the nonzero members.
  std::vector<Element> rest;
  for (Element x : family)
    if (x != 0) rest.push_back(x);
  if (rest.size() <= 6) {
    std::sort(rest.begin(), rest.end());
    do {
      if (ordered_sum(e.table(), rest) != s) throw InvariantViolation("orthosum depends on the order of summation");
    } while (std::next_permutation(rest.begin(), rest.end()));
  } else {
    std::reverse(rest.begin(), rest.end());
    if (ordered_sum(e.table(), rest) != s) throw InvariantViolation("orthosum depends on the order of summation");
  }
  return s;
}

}  // namespace pea
