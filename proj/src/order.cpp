#include "pea/order.hpp"

#include "pea/errors.hpp"

#include <algorithm>
#include <string>

namespace pea {

std::size_t Poset::at(Element a, Element b) const {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n_ || static_cast<std::size_t>(b) >= n_)
    throw StructuralError("poset index out of range");
  return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b);
}

std::optional<Element> Poset::supremum(const std::vector<Element>& xs) const {
  const auto n = static_cast<Element>(n_);
  const auto upper = [&](Element u) { return std::all_of(xs.begin(), xs.end(), [&](Element x) { return leq(x, u); }); };
  for (Element u = 0; u < n; ++u) {
    if (!upper(u)) continue;
    bool least = true;
    for (Element v = 0; v < n && least; ++v)
      if (upper(v) && !leq(u, v)) least = false;
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<Element> Poset::infimum(const std::vector<Element>& xs) const {
  const auto n = static_cast<Element>(n_);
  for (Element l = 0; l < n; ++l) {
    if (!std::all_of(xs.begin(), xs.end(), [&](Element x) { return leq(l, x); })) continue;
    bool greatest = true;
    for (Element v = 0; v < n && greatest; ++v)
      if (std::all_of(xs.begin(), xs.end(), [&](Element x) { return leq(v, x); }) && !leq(v, l))
        greatest = false;
    if (greatest) return l;
  }
  return std::nullopt;
}

ElementSet Poset::down_set(Element e) const {
  ElementSet s(n_);
  for (std::size_t x = 0; x < n_; ++x)
    if (leq(static_cast<Element>(x), e)) s.insert(static_cast<Element>(x));
  return s;
}

Poset derive_order(const PeaTable& t) {
  Poset p;
  const std::size_t n = t.size();
  const auto en = static_cast<Element>(n);
  p.n_ = n;
  p.leq_.assign(n * n, 0);
  p.right_.assign(n * n, kUndefined);
  p.left_.assign(n * n, kUndefined);
  for (Element a = 0; a < en; ++a)
    for (Element c = 0; c < en; ++c) {
      const Element b = t.sum(a, c);
      if (b == kUndefined) continue;
      const std::size_t ab = p.at(a, b);
      if (p.right_[ab] != kUndefined && p.right_[ab] != c)
        throw InvariantViolation("right residual of " + std::to_string(a) + " in " + std::to_string(b) +
                                 " is not unique");
      p.leq_[ab] = 1;
      p.right_[ab] = c;
    }
  for (Element d = 0; d < en; ++d)
    for (Element a = 0; a < en; ++a) {
      const Element b = t.sum(d, a);
      if (b == kUndefined) continue;
      const std::size_t ab = p.at(a, b);
      if (p.left_[ab] != kUndefined && p.left_[ab] != d)
        throw InvariantViolation("left residual of " + std::to_string(a) + " in " + std::to_string(b) +
                                 " is not unique");
      p.left_[ab] = d;
    }

  for (Element a = 0; a < en; ++a) {
    if (!p.leq(a, a)) throw InvariantViolation("derived order is not reflexive");
    if (!p.leq(0, a) || !p.leq(a, t.one())) throw InvariantViolation("derived order is not bounded by 0 and 1");
    for (Element b = 0; b < en; ++b) {
      const bool ab = p.leq(a, b);
      if (ab != (p.left_[p.at(a, b)] != kUndefined))
        throw InvariantViolation("a+c = b and d+a = b are not simultaneously solvable");
      if (ab && a != b && p.leq(b, a)) throw InvariantViolation("derived order is not antisymmetric");
      for (Element c = 0; c < en; ++c)
        if (ab && p.leq(b, c) && !p.leq(a, c)) throw InvariantViolation("derived order is not transitive");
    }
  }

  p.meet_.assign(n * n, kUndefined);
  p.join_.assign(n * n, kUndefined);
  for (Element a = 0; a < en; ++a)
    for (Element b = a; b < en; ++b) {
      const auto m = p.infimum({a, b});
      const auto j = p.supremum({a, b});
      p.meet_[p.at(a, b)] = p.meet_[p.at(b, a)] = m.value_or(kUndefined);
      p.join_[p.at(a, b)] = p.join_[p.at(b, a)] = j.value_or(kUndefined);
      if (!m || !j) p.lattice_ = false;
    }

  // Longest chains: elements sorted by number of strict lower bounds is a
  // linear extension, so one pass suffices.
  std::vector<Element> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Element>(i);
  const auto below = [&](Element e) {
    int k = 0;
    for (Element x = 0; x < en; ++x) k += p.less(x, e);
    return k;
  };
  std::vector<int> below_count(n);
  for (Element e = 0; e < en; ++e) below_count[static_cast<std::size_t>(e)] = below(e);
  std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
    return below_count[static_cast<std::size_t>(x)] < below_count[static_cast<std::size_t>(y)];
  });
  p.level_.assign(n, 0);
  for (Element e : order)
    for (Element x = 0; x < en; ++x)
      if (p.less(x, e))
        p.level_[static_cast<std::size_t>(e)] =
            std::max(p.level_[static_cast<std::size_t>(e)], p.level_[static_cast<std::size_t>(x)] + 1);
  return p;
}

}  // namespace pea
