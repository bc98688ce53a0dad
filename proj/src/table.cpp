#include "pea/table.hpp"

#include "pea/errors.hpp"

#include <algorithm>
#include <sstream>

namespace pea {

PeaTable::PeaTable(std::size_t n, std::string name)
    : n_(n), cells_(n * n, kUndefined), labels_(n), name_(std::move(name)) {
  if (n == 0) throw StructuralError("a pseudo-effect algebra has at least one element");
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Element>(x);
    cells_[index(0, e)] = e;
    cells_[index(e, 0)] = e;
  }
}

std::size_t PeaTable::index(Element a, Element b) const {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n_ || static_cast<std::size_t>(b) >= n_)
    throw StructuralError("element index out of range: (" + std::to_string(a) + ", " +
                          std::to_string(b) + ") with " + std::to_string(n_) + " elements");
  return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b);
}

void PeaTable::set_sum(Element a, Element b, Element c) {
  if (c < 0 || static_cast<std::size_t>(c) >= n_)
    throw StructuralError("sum result out of range: " + std::to_string(c));
  cells_[index(a, b)] = c;
}

PeaTable PeaTable::from_raw(std::size_t n, Element zero, Element one, const std::vector<Sum>& sums,
                            const std::vector<std::string>& labels, std::string name) {
  if (n == 0) throw StructuralError("a pseudo-effect algebra has at least one element");
  const auto in_range = [n](Element e) { return e >= 0 && static_cast<std::size_t>(e) < n; };
  if (!in_range(zero)) throw StructuralError("zero index out of range");
  if (!in_range(one)) throw StructuralError("unit index out of range");
  if (n > 1 && zero == one) throw StructuralError("zero and unit coincide in a table with more than one element");
  if (!labels.empty() && labels.size() != n) throw StructuralError("label vector does not match element count");

  std::vector<Element> to_normal(n);
  to_normal[static_cast<std::size_t>(zero)] = 0;
  to_normal[static_cast<std::size_t>(one)] = static_cast<Element>(n) - 1;
  Element next = 1;
  bool moved = false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<Element>(i);
    if (e == zero || e == one) continue;
    to_normal[i] = next++;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (to_normal[i] != static_cast<Element>(i)) moved = true;

  PeaTable t(n, std::move(name));
  for (const auto& [a, b, c] : sums) {
    if (!in_range(a) || !in_range(b) || !in_range(c))
      throw StructuralError("sum " + std::to_string(a) + " " + std::to_string(b) + " " +
                            std::to_string(c) + " references an element out of range");
    t.set_sum(to_normal[static_cast<std::size_t>(a)], to_normal[static_cast<std::size_t>(b)],
              to_normal[static_cast<std::size_t>(c)]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::string l = labels.empty() ? std::string{} : labels[i];
    if (l.empty() && moved) l = std::to_string(i);
    if (!l.empty()) t.set_label(to_normal[i], l);
  }
  return t;
}

bool PeaTable::has_labels() const noexcept {
  return std::any_of(labels_.begin(), labels_.end(), [](const std::string& s) { return !s.empty(); });
}

void PeaTable::set_label(Element e, std::string label) {
  index(e, 0);
  labels_[static_cast<std::size_t>(e)] = std::move(label);
}

std::string PeaTable::display(Element e) const {
  const auto& l = label(e);
  return l.empty() ? std::to_string(e) : l;
}

Element PeaTable::find(const std::string& token) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (labels_[i] == token && !token.empty()) return static_cast<Element>(i);
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return kUndefined;
  const unsigned long v = std::stoul(token);
  return v < n_ ? static_cast<Element>(v) : kUndefined;
}

std::string PeaTable::format(const ElementSet& s) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](Element e) {
    out << (first ? "" : ", ") << display(e);
    first = false;
  });
  out << '}';
  return out.str();
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Identity: return "identity";
    case Axiom::Associativity: return "(i) associativity";
    case Axiom::Complements: return "(ii) unique complements";
    case Axiom::Conjugates: return "(iii) conjugate sums";
    case Axiom::UnitAnnihilates: return "(iv) unit sums";
  }
  return "?";
}

bool AxiomReport::violates(Axiom a) const {
  return std::any_of(violations.begin(), violations.end(),
                     [a](const AxiomViolation& v) { return v.axiom == a; });
}

namespace {

// Shared body of verify_axioms and satisfies_axioms. `sink` returns false to
// stop the scan early.
template <class Sink>
void scan_axioms(const PeaTable& t, Sink&& sink) {
  const auto n = static_cast<Element>(t.size());
  const Element one = t.one();

  for (Element x = 0; x < n; ++x) {
    if (t.sum(0, x) != x || t.sum(x, 0) != x)
      if (!sink(Axiom::Identity, {x}, "0 is not a two-sided identity for this element")) return;
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = t.sum(a, b);
      for (Element c = 0; c < n; ++c) {
        const Element bc = t.sum(b, c);
        const Element left = ab == kUndefined ? kUndefined : t.sum(ab, c);
        const Element right = bc == kUndefined ? kUndefined : t.sum(a, bc);
        if (left != right) {
          const char* why = (left == kUndefined || right == kUndefined)
                                ? "(a+b)+c and a+(b+c) differ in existence"
                                : "(a+b)+c != a+(b+c)";
          if (!sink(Axiom::Associativity, {a, b, c}, why)) return;
        }
      }
    }

  for (Element a = 0; a < n; ++a) {
    int right = 0, left = 0;
    for (Element d = 0; d < n; ++d) {
      if (t.sum(a, d) == one) ++right;
      if (t.sum(d, a) == one) ++left;
    }
    if (right != 1)
      if (!sink(Axiom::Complements, {a},
                "a+d = 1 has " + std::to_string(right) + " solutions, expected exactly one"))
        return;
    if (left != 1)
      if (!sink(Axiom::Complements, {a},
                "e+a = 1 has " + std::to_string(left) + " solutions, expected exactly one"))
        return;
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element s = t.sum(a, b);
      if (s == kUndefined) continue;
      bool has_d = false, has_e = false;
      for (Element x = 0; x < n; ++x) {
        has_d = has_d || t.sum(x, a) == s;
        has_e = has_e || t.sum(b, x) == s;
      }
      if (!has_d || !has_e)
        if (!sink(Axiom::Conjugates, {a, b},
                  !has_d ? "no d with a+b = d+a" : "no e with a+b = b+e"))
          return;
    }

  for (Element a = 1; a < n; ++a)
    if (t.defined(one, a) || t.defined(a, one))
      if (!sink(Axiom::UnitAnnihilates, {a}, "1+a or a+1 exists for a nonzero a")) return;
}

}  // namespace

AxiomReport verify_axioms(const PeaTable& t) {
  AxiomReport report;
  scan_axioms(t, [&](Axiom ax, std::vector<Element> w, std::string detail) {
    report.violations.push_back({ax, std::move(w), std::move(detail)});
    return true;
  });
  return report;
}

bool satisfies_axioms(const PeaTable& t) {
  bool ok = true;
  scan_axioms(t, [&](Axiom, std::vector<Element>, const std::string&) {
    ok = false;
    return false;
  });
  return ok;
}

}  // namespace pea
