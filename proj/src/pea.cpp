#include "pea/pea.hpp"

#include "pea/errors.hpp"

#include <sstream>

namespace pea {

namespace {

PeaTable checked(PeaTable t) {
  const AxiomReport report = verify_axioms(t);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "'" << (t.name().empty() ? "table" : t.name()) << "' is not a pseudo-effect algebra: "
        << report.violations.size() << " violation(s), first: " << axiom_name(report.violations.front().axiom);
    for (Element w : report.violations.front().witnesses) msg << ' ' << t.display(w);
    throw DomainError(msg.str());
  }
  return t;
}

}  // namespace

Pea::Pea(PeaTable t) : table_(checked(std::move(t))), order_(derive_order(table_)) {}

std::pair<Element, Element> Pea::residuals(Element a, Element b) const {
  const auto right = order_.right_residual(a, b);
  const auto left = order_.left_residual(b, a);
  if (!right || !left)
    throw DomainError("residual undefined: " + display(a) + " is not below " + display(b));
  return {*right, *left};
}

Element Pea::right_complement(Element x) const { return residuals(x, one()).first; }

Element Pea::left_complement(Element x) const { return residuals(x, one()).second; }

Element Pea::meet_required(Element a, Element b) const {
  const auto m = order_.meet(a, b);
  if (!m) throw InvariantViolation("meet of " + display(a) + " and " + display(b) + " does not exist");
  return *m;
}

Element ordered_sum(const PeaTable& t, const std::vector<Element>& xs) {
  Element acc = t.zero();
  for (Element x : xs) {
    acc = t.sum(acc, x);
    if (acc == kUndefined) return kUndefined;
  }
  return acc;
}

}  // namespace pea
