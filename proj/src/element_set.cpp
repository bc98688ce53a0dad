#include "pea/element_set.hpp"

#include "pea/errors.hpp"

#include <string>

namespace pea {

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> members)
    : bits_(universe) {
  for (Element e : members) insert(e);
}

ElementSet::ElementSet(std::size_t universe, const std::vector<Element>& members)
    : bits_(universe) {
  for (Element e : members) insert(e);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  s.bits_.set();
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, unsigned long long mask) {
  if (universe > 64) throw DomainError("from_mask: universe exceeds 64 elements");
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i)
    if ((mask >> i) & 1ULL) s.bits_.set(i);
  return s;
}

void ElementSet::check(Element e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= bits_.size())
    throw StructuralError("element " + std::to_string(e) + " outside universe of size " +
                          std::to_string(bits_.size()));
}

bool ElementSet::contains(Element e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= bits_.size()) return false;
  return bits_.test(static_cast<std::size_t>(e));
}

void ElementSet::insert(Element e) {
  check(e);
  bits_.set(static_cast<std::size_t>(e));
}

void ElementSet::erase(Element e) {
  check(e);
  bits_.reset(static_cast<std::size_t>(e));
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (universe() != other.universe()) throw DomainError("ElementSet universes differ");
  return bits_.is_subset_of(other.bits_);
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  if (universe() != other.universe()) throw DomainError("ElementSet universes differ");
  bits_ |= other.bits_;
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  if (universe() != other.universe()) throw DomainError("ElementSet universes differ");
  bits_ &= other.bits_;
  return *this;
}

}  // namespace pea
