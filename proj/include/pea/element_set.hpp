#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pea {

/// Dense element index. Zero is always 0 and the unit is always size-1 in a
/// normalized table.
using Element = int;

/// Subset of the carrier {0, ..., universe-1} of some algebra.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members);
  ElementSet(std::size_t universe, const std::vector<Element>& members);

  static ElementSet full(std::size_t universe);
  /// Subset whose members are the set bits of `mask` (universe <= 64).
  static ElementSet from_mask(std::size_t universe, unsigned long long mask);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(Element e) const;
  void insert(Element e);
  void erase(Element e);

  bool is_subset_of(const ElementSet& other) const;
  std::vector<Element> members() const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.bits_ < b.bits_; }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
      f(static_cast<Element>(i));
  }

 private:
  void check(Element e) const;

  boost::dynamic_bitset<> bits_;
};

}  // namespace pea
