#include "pea/construct.hpp"

#include <algorithm>
#include <sstream>

namespace pea {

Element Interval::local(Element parent) const {
  for (std::size_t i = 0; i < embedding.size(); ++i)
    if (embedding[i] == parent) return static_cast<Element>(i);
  return kUndefined;
}

namespace {

Pea validated(PeaTable t, const char* what) {
  const AxiomReport report = verify_axioms(t);
  if (!report.ok())
    throw InvariantViolation(std::string(what) + " is not a pseudo-effect algebra (" +
                             axiom_name(report.violations.front().axiom) + ")");
  return Pea(std::move(t));
}

}  // namespace

Interval interval_algebra(const Pea& e, Element top) {
  if (top < 0 || static_cast<std::size_t>(top) >= e.size()) throw DomainError("interval top out of range");
  std::vector<Element> carrier;
  for (Element x = 0; x < static_cast<Element>(e.size()); ++x)
    if (x != top && e.leq(x, top)) carrier.push_back(x);
  carrier.push_back(top);

  std::vector<Element> local(e.size(), kUndefined);
  for (std::size_t i = 0; i < carrier.size(); ++i) local[static_cast<std::size_t>(carrier[i])] = static_cast<Element>(i);

  PeaTable t(carrier.size(), e.name().empty() ? std::string{} : e.name() + "[0," + e.display(top) + "]");
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    t.set_label(static_cast<Element>(i), e.display(carrier[i]));
    for (std::size_t j = 0; j < carrier.size(); ++j) {
      const Element s = e.sum(carrier[i], carrier[j]);
      const Element ls = s == kUndefined ? kUndefined : local[static_cast<std::size_t>(s)];
      if (ls == kUndefined) {
        t.clear_sum(static_cast<Element>(i), static_cast<Element>(j));
      } else {
        t.set_sum(static_cast<Element>(i), static_cast<Element>(j), ls);
      }
    }
  }
  return Interval{validated(std::move(t), "interval algebra"), std::move(carrier)};
}

Element Product::encode(const std::vector<Element>& coordinates) const {
  std::size_t x = 0;
  for (std::size_t k = 0; k < radices.size(); ++k) {
    const Element c = coordinates.at(k);
    if (c < 0 || static_cast<std::size_t>(c) >= radices[k]) throw StructuralError("product coordinate out of range");
    x = x * radices[k] + static_cast<std::size_t>(c);
  }
  return static_cast<Element>(x);
}

Product direct_product(std::span<const Pea> factors) {
  if (factors.empty()) throw DomainError("direct_product needs at least one factor");
  std::size_t n = 1;
  for (const Pea& f : factors) {
    n *= f.size();
    if (n > 1u << 16) throw ResourceError("direct product exceeds 65536 elements");
  }
  const std::size_t k = factors.size();

  std::vector<std::vector<Element>> proj(k, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t i = k; i-- > 0;) {
      proj[i][x] = static_cast<Element>(rest % factors[i].size());
      rest /= factors[i].size();
    }
  }
  const auto encode = [&](const std::vector<Element>& c) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) x = x * factors[i].size() + static_cast<std::size_t>(c[i]);
    return static_cast<Element>(x);
  };

  std::string name;
  for (std::size_t i = 0; i < k; ++i) name += (i ? "x" : "") + factors[i].name();

  PeaTable t(n, name);
  const bool labelled = std::any_of(factors.begin(), factors.end(),
                                    [](const Pea& f) { return f.table().has_labels(); });
  std::vector<Element> c(k);
  for (std::size_t x = 0; x < n; ++x) {
    if (labelled || k > 1) {
      std::string l = k > 1 ? "(" : "";
      for (std::size_t i = 0; i < k; ++i) l += (i ? "," : "") + factors[i].display(proj[i][x]);
      t.set_label(static_cast<Element>(x), k > 1 ? l + ")" : l);
    }
    for (std::size_t y = 0; y < n; ++y) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        c[i] = factors[i].sum(proj[i][x], proj[i][y]);
        ok = c[i] != kUndefined;
      }
      if (ok) {
        t.set_sum(static_cast<Element>(x), static_cast<Element>(y), encode(c));
      } else {
        t.clear_sum(static_cast<Element>(x), static_cast<Element>(y));
      }
    }
  }
  std::vector<std::size_t> radices;
  for (const Pea& f : factors) radices.push_back(f.size());
  return Product{validated(std::move(t), "direct product"), std::move(proj), std::move(radices)};
}

IntegerLattice::value_type IntegerLattice::add(const value_type& a, const value_type& b) const {
  value_type r(rank);
  for (std::size_t i = 0; i < rank; ++i) r[i] = a[i] + b[i];
  return r;
}

bool IntegerLattice::leq(const value_type& a, const value_type& b) const {
  for (std::size_t i = 0; i < rank; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<IntegerLattice::value_type> IntegerLattice::candidates(const value_type& u, std::size_t bound) const {
  std::size_t total = 1;
  for (long long x : u) {
    if (x < 0) return {};
    total *= static_cast<std::size_t>(x) + 1;
    if (total > bound) throw ResourceError("interval [0,u] has more than " + std::to_string(bound) + " elements");
  }
  std::vector<value_type> out;
  value_type g(rank, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    out.push_back(g);
    for (std::size_t i = rank; i-- > 0;) {
      if (++g[i] <= u[i]) break;
      g[i] = 0;
    }
  }
  return out;
}

std::string IntegerLattice::format(const value_type& a) const {
  std::ostringstream out;
  if (rank == 1) {
    out << a[0];
    return out.str();
  }
  out << '(';
  for (std::size_t i = 0; i < rank; ++i) out << (i ? "," : "") << a[i];
  out << ')';
  return out.str();
}

PeaTable integer_interval(const std::vector<long long>& unit, std::size_t max_elements) {
  if (unit.empty()) throw DomainError("integer_interval needs a unit of rank at least 1");
  PeaTable t = pogroup_interval(IntegerLattice{unit.size()}, unit, max_elements);
  t.set_name("Z" + std::to_string(unit.size()) + "[0," + IntegerLattice{unit.size()}.format(unit) + "]");
  return t;
}

}  // namespace pea
