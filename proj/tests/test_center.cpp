#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracle.hpp"

#include "pea/center.hpp"
#include "pea/construct.hpp"
#include "pea/decomposition.hpp"
#include "pea/errors.hpp"
#include "pea/fixtures.hpp"

using namespace pea;

namespace {

Pea fixture(const std::string& name) { return Pea(builtin_fixture(name)); }

Element at(const Pea& e, const std::string& label) {
  const Element x = e.table().find(label);
  REQUIRE(x != kUndefined);
  return x;
}

std::vector<std::string> labels(const Pea& e, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(e.display(x));
  return out;
}

std::vector<int> as_ints(const std::vector<Element>& xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("centrality on the fixtures") {
  const Pea m3 = fixture("M3"), b4 = fixture("B4");
  for (const auto& t : builtin_fixtures()) {
    const Pea e(t);
    CHECK(is_central(e, 0).central);
    CHECK(is_central(e, e.one()).central);
  }
  const CentralityVerdict v = is_central(m3, at(m3, "a"));
  CHECK_FALSE(v.central);
  CHECK(v.clause != CentralClause::None);
  CHECK_FALSE(v.witnesses.empty());
  CHECK(splitting_map_failure(m3, at(m3, "a")).has_value());
  CHECK(is_central(b4, at(b4, "p")).central);
  CHECK_FALSE(splitting_map_failure(b4, at(b4, "p")).has_value());

  CHECK(labels(m3, center(m3).members()) == std::vector<std::string>{"0", "1"});
  CHECK(center(b4).members().size() == 4);
  const Pea mo2 = fixture("MO2");
  CHECK(labels(mo2, center(mo2).members()) == std::vector<std::string>{"0", "1"});
  const Pea c2m3 = fixture("C2xM3");
  CHECK(labels(c2m3, center(c2m3).members()) == std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
}

TEST_CASE("center matches the definition by exhaustive isomorphism search") {
  for (const auto& t : testing::corpus_wide()) {
    CAPTURE(t.name());
    const Pea e(t);
    const oracle::Table o(t);
    const CentralStructure g = center(e);
    CHECK(as_ints(g.members()) == oracle::center(o));
    for (Element c = 0; c < static_cast<Element>(e.size()); ++c) {
      const bool clauses = check_central_clauses(e, c).central;
      const bool split = !splitting_map_failure(e, c).has_value();
      CHECK(clauses == split);
      CHECK(clauses == g.contains(c));
    }
  }
}

TEST_CASE("the center is a Boolean algebra under the order of E") {
  for (const auto& t : testing::corpus_wide()) {
    const Pea e(t);
    const oracle::Table o(t);
    const CentralStructure g = center(e);
    const auto& cs = g.members();
    for (Element c : cs) {
      CHECK(g.complement(c) == oracle::right_complement(o, c));
      CHECK(g.complement(c) == oracle::left_complement(o, c));
      CHECK(g.meet(c, g.complement(c)) == 0);
      CHECK(g.join(c, g.complement(c)) == e.one());
      CHECK(g.complement(g.complement(c)) == c);
      // c + c exists only for c = 0.
      CHECK(e.defined(c, c) == (c == 0));
      for (Element d : cs) {
        CHECK(g.meet(c, d) == oracle::meet(o, c, d));
        CHECK(g.join(c, d) == oracle::join(o, c, d));
        CHECK(g.complement(g.meet(c, d)) == g.join(g.complement(c), g.complement(d)));
        for (Element f : cs) {
          CHECK(g.meet(c, g.join(d, f)) == g.join(g.meet(c, d), g.meet(c, f)));
          CHECK(g.join(c, g.meet(d, f)) == g.meet(g.join(c, d), g.join(c, f)));
        }
      }
    }
  }
  const Pea m3 = fixture("M3");
  CHECK_THROWS_AS(center(m3).complement(at(m3, "a")), DomainError);
}

TEST_CASE("center of a central interval is the relative center") {
  for (const auto& t : testing::corpus_wide()) {
    const Pea e(t);
    const CentralStructure g = center(e);
    for (Element c : g.members()) {
      const Interval iv = interval_algebra(e, c);
      const auto local = oracle::center(oracle::Table(iv.algebra.table()));
      std::vector<int> expected;
      for (Element d : g.members())
        if (e.leq(d, c)) expected.push_back(iv.local(d));
      std::sort(expected.begin(), expected.end());
      CHECK(local == expected);
    }
  }
}

TEST_CASE("p ^ c is central in E[0,p] and c -> p ^ c is a Boolean homomorphism") {
  for (const auto& t : testing::corpus_wide()) {
    const Pea e(t);
    const CentralStructure g = center(e);
    for (Element p = 0; p < static_cast<Element>(e.size()); ++p) {
      const Interval iv = interval_algebra(e, p);
      const CentralStructure local = center(iv.algebra);
      const auto h = [&](Element c) { return iv.local(projection(e, g, c, p)); };
      for (Element c : g.members()) {
        CHECK(local.contains(h(c)));
        CHECK(h(g.complement(c)) == local.complement(h(c)));
        for (Element d : g.members()) {
          CHECK(h(g.meet(c, d)) == local.meet(h(c), h(d)));
          CHECK(h(g.join(c, d)) == local.join(h(c), h(d)));
        }
      }
    }
  }
}

TEST_CASE("sums distribute over existing joins") {
  for (const auto& t : testing::corpus5()) {
    const Pea e(t);
    const auto n = static_cast<Element>(e.size());
    for (Element x = 0; x < n; ++x)
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Element> fs;
        for (Element f = 0; f < n; ++f)
          if ((mask >> f) & 1u) fs.push_back(f);
        const auto sup = e.order().supremum(fs);
        if (!sup) continue;
        bool right = true, left = true;
        std::vector<Element> rs, ls;
        for (Element f : fs) {
          right = right && e.defined(x, f);
          left = left && e.defined(f, x);
          if (right) rs.push_back(e.sum(x, f));
          if (left) ls.push_back(e.sum(f, x));
        }
        if (right) {
          const auto s = e.order().supremum(rs);
          REQUIRE(e.defined(x, *sup));
          CHECK(s == e.sum(x, *sup));
        }
        if (left) {
          const auto s = e.order().supremum(ls);
          REQUIRE(e.defined(*sup, x));
          CHECK(s == e.sum(*sup, x));
        }
      }
  }
}

TEST_CASE("projections and central covers") {
  const Pea c2m3 = fixture("C2xM3");
  const CentralStructure g = center(c2m3);
  CHECK(projection(c2m3, g, at(c2m3, "(1,0)"), at(c2m3, "(1,a)")) == at(c2m3, "(1,0)"));
  CHECK_THROWS_AS(projection(c2m3, g, at(c2m3, "(0,a)"), 0), DomainError);
  CHECK(central_cover(g, at(c2m3, "(0,a)")) == at(c2m3, "(0,1)"));

  const Pea m3 = fixture("M3");
  CHECK(central_cover(center(m3), at(m3, "a")) == m3.one());

  for (const auto& t : testing::corpus_wide()) {
    const Pea e(t);
    const oracle::Table o(t);
    const CentralStructure g = center(e);
    const auto gamma = oracle::center(o);
    for (Element x = 0; x < static_cast<Element>(e.size()); ++x) CHECK(g.cover(x) == oracle::cover(o, gamma, x));
  }
}

TEST_CASE("central cover is a hull mapping onto the center") {
  for (const auto& t : testing::corpus_wide()) {
    const Pea e(t);
    const CentralStructure g = center(e);
    const HullReport h = verify_hull(e, g);
    CHECK_MESSAGE(h.ok, h.failure);
    // The laws restated independently.
    CHECK(g.cover(0) == 0);
    for (Element x = 0; x < static_cast<Element>(e.size()); ++x) {
      CHECK(e.leq(x, g.cover(x)));
      for (Element y = 0; y < static_cast<Element>(e.size()); ++y) {
        const auto m = e.order().meet(x, g.cover(y));
        REQUIRE(m);
        CHECK(g.cover(*m) == g.meet(g.cover(x), g.cover(y)));
      }
    }
    for (Element c : g.members()) CHECK(g.cover(c) == c);
  }
  // Identity is the hull map of a Boolean algebra.
  const Pea b4 = fixture("B4");
  const CentralStructure g = center(b4);
  for (Element x = 0; x < 4; ++x) CHECK(g.cover(x) == x);
}

TEST_CASE("covers of atoms are atoms of the center") {
  for (const auto& t : testing::corpus_wide()) {
    const Pea e(t);
    const CentralStructure g = center(e);
    for (Element a = 1; a < static_cast<Element>(e.size()); ++a) {
      bool atom = true;
      for (Element b = 1; b < static_cast<Element>(e.size()); ++b) atom = atom && !e.order().less(b, a);
      if (!atom) continue;
      const auto& ga = g.atoms();
      CHECK(std::find(ga.begin(), ga.end(), g.cover(a)) != ga.end());
    }
  }
}

TEST_CASE("Gamma-orthogonality through covers equals the direct search") {
  const Pea b4 = fixture("B4"), mo2 = fixture("MO2"), c2m3 = fixture("C2xM3");
  CHECK(gamma_orthogonal(center(b4), {at(b4, "p"), at(b4, "q")}));
  CHECK_FALSE(gamma_orthogonal(center(mo2), {at(mo2, "a"), at(mo2, "b")}));
  CHECK(orthosum(b4, center(b4), {at(b4, "p"), at(b4, "q")}) == b4.one());
  CHECK(orthosum(c2m3, center(c2m3), {at(c2m3, "(1,0)"), at(c2m3, "(0,a)")}) == at(c2m3, "(1,a)"));
  CHECK_THROWS_AS(orthosum(mo2, center(mo2), {at(mo2, "a"), at(mo2, "b")}), DomainError);

  for (const auto& t : testing::corpus_wide()) {
    const Pea e(t);
    const oracle::Table o(t);
    const CentralStructure g = center(e);
    const auto gamma = oracle::center(o);
    const auto n = static_cast<Element>(e.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Element> fam;
      for (Element x = 1; x < n; ++x)
        if ((mask >> x) & 1u) fam.push_back(x);
      // Search pairwise disjoint central dominators directly.
      bool found = false;
      std::vector<int> pick(fam.size());
      const auto rec = [&](auto&& self, std::size_t i) -> void {
        if (found) return;
        if (i == fam.size()) {
          found = true;
          return;
        }
        for (int c : gamma) {
          if (!oracle::leq(o, fam[i], c)) continue;
          bool ok = true;
          for (std::size_t j = 0; j < i; ++j) ok = ok && oracle::disjoint(o, c, pick[j]);
          if (!ok) continue;
          pick[i] = c;
          self(self, i + 1);
        }
      };
      rec(rec, 0);
      CHECK(gamma_orthogonal(g, fam) == found);
      if (found) {
        const auto sup = e.order().supremum(fam);
        CHECK(orthosum(e, g, fam) == sup);
      }
    }
  }
}

TEST_CASE("every element is the sum of its parts over a central partition") {
  for (const auto& t : testing::corpus_wide()) {
    const Pea e(t);
    const CentralStructure g = center(e);
    for (std::size_t slots = 1; slots <= 3; ++slots)
      for (const auto& parts : central_partitions(e, g, e.one(), slots))
        for (Element x = 0; x < static_cast<Element>(e.size()); ++x) {
          std::vector<Element> pieces;
          for (Element c : parts) pieces.push_back(projection(e, g, c, x));
          CHECK(ordered_sum(e.table(), pieces) == x);
          std::vector<Element> reversed(pieces.rbegin(), pieces.rend());
          CHECK(ordered_sum(e.table(), reversed) == x);
        }
  }
}
