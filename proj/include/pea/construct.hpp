#pragma once

#include "pea/errors.hpp"
#include "pea/pea.hpp"

#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pea {

/// E[0,e] with the restricted sum, plus the index translation into E.
struct Interval {
  Pea algebra;
  std::vector<Element> embedding;  // interval index -> parent index

  /// Interval index of a parent element, kUndefined when outside [0,e].
  Element local(Element parent) const;
};

/// Carrier {x : x <= top} in ascending parent order with top moved last;
/// f +_top g exists iff f+g exists and f+g <= top. Labels are inherited.
Interval interval_algebra(const Pea& e, Element top);

struct Product {
  Pea algebra;
  /// projections[k][x] is coordinate k of product element x.
  std::vector<std::vector<Element>> projections;
  std::vector<std::size_t> radices;

  Element encode(const std::vector<Element>& coordinates) const;
};

/// Cartesian product with coordinatewise partial sum. Elements are numbered
/// in mixed radix with the first factor most significant, so the zero tuple
/// is index 0 and the unit tuple is last. Throws DomainError on no factors.
Product direct_product(std::span<const Pea> factors);

/// A partially ordered group fragment that can enumerate a finite superset
/// of any interval [0,u] it is asked about.
template <class G>
concept PoGroup = requires(const G& g, const typename G::value_type& a, const typename G::value_type& b) {
  typename G::value_type;
  { g.zero() } -> std::convertible_to<typename G::value_type>;
  { g.add(a, b) } -> std::convertible_to<typename G::value_type>;
  { g.leq(a, b) } -> std::convertible_to<bool>;
  { g.candidates(a, std::size_t{}) } -> std::convertible_to<std::vector<typename G::value_type>>;
  { g.format(a) } -> std::convertible_to<std::string>;
};

/// G[0,u] with the group sum restricted to the interval.
template <PoGroup G>
PeaTable pogroup_interval(const G& group, const typename G::value_type& unit, std::size_t max_elements) {
  using V = typename G::value_type;
  const V zero = group.zero();
  if (!group.leq(zero, unit)) throw DomainError("pogroup_interval: unit is not positive");
  std::vector<V> carrier;
  for (const V& g : group.candidates(unit, max_elements))
    if (group.leq(zero, g) && group.leq(g, unit)) carrier.push_back(g);
  if (carrier.size() > max_elements)
    throw ResourceError("interval [0,u] has more than " + std::to_string(max_elements) + " elements");

  std::vector<V> ordered{zero};
  for (const V& g : carrier)
    if (!(g == zero) && !(g == unit)) ordered.push_back(g);
  if (!(unit == zero)) ordered.push_back(unit);

  const auto find = [&](const V& g) -> Element {
    for (std::size_t i = 0; i < ordered.size(); ++i)
      if (ordered[i] == g) return static_cast<Element>(i);
    return kUndefined;
  };
  PeaTable t(ordered.size());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    t.set_label(static_cast<Element>(i), group.format(ordered[i]));
    for (std::size_t j = 0; j < ordered.size(); ++j) {
      const Element s = find(group.add(ordered[i], ordered[j]));
      if (s == kUndefined) {
        t.clear_sum(static_cast<Element>(i), static_cast<Element>(j));
      } else {
        t.set_sum(static_cast<Element>(i), static_cast<Element>(j), s);
      }
    }
  }
  return t;
}

/// The free abelian group Z^k ordered coordinatewise.
struct IntegerLattice {
  using value_type = std::vector<long long>;

  std::size_t rank;

  value_type zero() const { return value_type(rank, 0); }
  value_type add(const value_type& a, const value_type& b) const;
  bool leq(const value_type& a, const value_type& b) const;
  /// The box [0,u]; throws ResourceError when it exceeds `bound`.
  std::vector<value_type> candidates(const value_type& u, std::size_t bound) const;
  std::string format(const value_type& a) const;
};

/// Z^k interval [0,u] with coordinatewise order.
PeaTable integer_interval(const std::vector<long long>& unit, std::size_t max_elements = 4096);

}  // namespace pea
