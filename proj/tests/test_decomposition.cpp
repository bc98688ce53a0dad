#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracle.hpp"

#include "pea/classes.hpp"
#include "pea/decomposition.hpp"
#include "pea/errors.hpp"
#include "pea/fixtures.hpp"
#include "pea/io.hpp"
#include "pea/morphism.hpp"

#include <filesystem>
#include <functional>

using namespace pea;

namespace {

Pea fixture(const std::string& name) { return Pea(builtin_fixture(name)); }

Element at(const Pea& e, const std::string& label) {
  const Element x = e.table().find(label);
  REQUIRE(x != kUndefined);
  return x;
}

std::vector<Element> centers(const DecompositionReport& r) {
  std::vector<Element> out;
  for (const auto& p : r.parts) out.push_back(p.center);
  return out;
}

std::vector<Element> refinement_centers(const DecompositionReport& r) {
  std::vector<Element> out;
  for (const auto& p : r.refinements) out.push_back(p.center);
  return out;
}

oracle::Mask mask_of(const ElementSet& s) {
  oracle::Mask m = 0;
  s.for_each([&](Element x) { m |= 1u << x; });
  return m;
}

using Role = std::function<bool(const oracle::Kind& k, const oracle::Kind& f)>;

// Every ordered tuple of pairwise disjoint central elements summing to
// `top` whose entries satisfy the roles, straight from the definitions.
std::vector<std::vector<int>> oracle_solutions(const oracle::Table& o, const std::vector<int>& gamma, oracle::Mask k,
                                               oracle::Mask f, const std::vector<Role>& roles, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(roles.size());
  const auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == roles.size()) {
      int s = 0;
      for (int c : pick) s = s == oracle::U ? oracle::U : o.sum(s, c);
      if (s == top) out.push_back(pick);
      return;
    }
    for (int c : gamma) {
      if (!oracle::leq(o, c, top)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j) ok = ok && oracle::disjoint(o, c, pick[j]);
      if (!ok || !roles[i](oracle::classify(o, gamma, k, c), oracle::classify(o, gamma, f, c))) continue;
      pick[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> as_ints(const std::vector<Element>& xs) { return {xs.begin(), xs.end()}; }

using K = const oracle::Kind&;
const std::vector<Role> kThree = {
    [](K k, K) { return k.type_k; },
    [](K k, K) { return k.locally && k.properly; },
    [](K k, K) { return k.purely; },
};
const std::vector<Role> kSix = {
    [](K k, K) { return k.type_k; },
    [](K k, K f) { return f.type_k && k.locally && k.properly; },
    [](K k, K f) { return k.locally && f.properly; },
    [](K k, K f) { return f.type_k && k.purely; },
    [](K k, K f) { return f.locally && f.properly && k.purely; },
    [](K, K f) { return f.purely; },
};
const std::vector<Role> kRoman = {
    [](K k, K) { return k.locally; },
    [](K k, K f) { return f.locally && k.purely; },
    [](K, K f) { return f.purely; },
};

void check_witness(const Pea& e, const DecompositionReport& r) {
  CHECK(ordered_sum(e.table(), centers(r)) == e.one());
  CHECK(verify_witness(r.witness.product.algebra.table(), e.table(), r.witness.phi));
  for (std::size_t i = 0; i < r.parts.size(); ++i)
    CHECK(r.parts[i].algebra.algebra.size() == r.witness.factors[i].algebra.size());
}

}  // namespace

TEST_CASE("product witnesses") {
  const Pea b4 = fixture("B4"), c2m3 = fixture("C2xM3");
  const CentralStructure gb = center(b4), gc = center(c2m3);
  const ProductWitness id = phi_isomorphism(b4, gb, {b4.one()});
  CHECK(id.phi.map == std::vector<Element>{0, 1, 2, 3});
  const ProductWitness pq = phi_isomorphism(b4, gb, {at(b4, "p"), at(b4, "q")});
  CHECK(find_isomorphism(pq.product.algebra, Pea(integer_interval({1, 1}))));
  const ProductWitness split = phi_isomorphism(c2m3, gc, {at(c2m3, "(1,0)"), at(c2m3, "(0,1)")});
  CHECK(find_isomorphism(split.factors[0].algebra, fixture("C2")));
  CHECK(find_isomorphism(split.factors[1].algebra, fixture("M3")));

  const Pea m3 = fixture("M3");
  CHECK_THROWS_AS(phi_isomorphism(m3, center(m3), {at(m3, "a"), at(m3, "a")}), DomainError);
  CHECK_THROWS_AS(phi_isomorphism(b4, gb, {at(b4, "p")}), DomainError);
  CHECK_THROWS_AS(phi_isomorphism(b4, gb, {b4.one(), at(b4, "p")}), DomainError);
  CHECK_THROWS_AS(phi_isomorphism(b4, gb, {}), DomainError);
}

TEST_CASE("three-part examples") {
  const Pea m3 = fixture("M3"), b4 = fixture("B4");
  const CentralStructure gm = center(m3), gb = center(b4);
  const TDSet zero = make_td_set(m3, gm, ElementSet(3, {0}));
  CHECK(centers(decompose_three(m3, gm, zero)) == std::vector<Element>{0, 0, m3.one()});
  CHECK(centers(decompose_three(m3, gm, td_from_class(m3, gm, "atoms"))) == std::vector<Element>{0, m3.one(), 0});
  CHECK(centers(decompose_three(b4, gb, td_from_class(b4, gb, "atoms"))) == std::vector<Element>{b4.one(), 0, 0});
  CHECK_THROWS_AS(decompose_three(m3, gm, TDSet{ElementSet(3, {1}), false, false, 0, 0}), DomainError);
}

TEST_CASE("three-part decomposition is the unique one, for every generated TD set") {
  for (const auto& t : testing::corpus5()) {
    const Pea e(t);
    const oracle::Table o(t);
    const CentralStructure g = center(e);
    const auto gamma = oracle::center(o);
    for (oracle::Mask m = 0; m < (1u << e.size()); ++m) {
      const TDSet k = td_generated(e, g, ElementSet::from_mask(e.size(), m));
      const DecompositionReport r = decompose_three(e, g, k);
      check_witness(e, r);
      const auto sols = oracle_solutions(o, gamma, mask_of(k.members), mask_of(k.members), kThree, e.one());
      REQUIRE(sols.size() == 1);
      CHECK(sols[0] == as_ints(centers(r)));
      CHECK(r.parts[0].center == k.restricted_type_cover);
      CHECK(r.parts[2].center == g.complement(k.type_cover));
    }
  }
}

TEST_CASE("six-part and I/II/III decompositions for nested class pairs") {
  for (const auto& t : testing::corpus_wide()) {
    CAPTURE(t.name());
    const Pea e(t);
    const oracle::Table o(t);
    const CentralStructure g = center(e);
    const auto gamma = oracle::center(o);
    std::vector<std::pair<std::string, TDSet>> sets;
    for (const ClassInfo& c : class_registry())
      if (c.alias_of.empty()) sets.emplace_back(c.name, td_from_class(e, g, c.name));
    for (const auto& [kn, k] : sets)
      for (const auto& [fn, f] : sets) {
        if (!k.members.is_subset_of(f.members)) {
          CHECK_THROWS_AS(decompose_six(e, g, k, f), DomainError);
          continue;
        }
        CAPTURE(kn);
        CAPTURE(fn);
        const auto km = mask_of(k.members), fm = mask_of(f.members);

        const DecompositionReport six = decompose_six(e, g, k, f, kn, fn);
        check_witness(e, six);
        auto sols = oracle_solutions(o, gamma, km, fm, kSix, e.one());
        REQUIRE(sols.size() == 1);
        CHECK(sols[0] == as_ints(centers(six)));

        const DecompositionReport three_k = decompose_three(e, g, k), three_f = decompose_three(e, g, f);
        CHECK(six.parts[0].center == three_k.parts[0].center);
        CHECK(six.parts[5].center == three_f.parts[2].center);

        const DecompositionReport roman = decompose_I_II_III(e, g, k, f, kn, fn);
        check_witness(e, roman);
        sols = oracle_solutions(o, gamma, km, fm, kRoman, e.one());
        REQUIRE(sols.size() == 1);
        CHECK(sols[0] == as_ints(centers(roman)));
        const auto rc = centers(roman), sc = centers(six);
        CHECK(rc[0] == k.type_cover);
        CHECK(rc[2] == g.complement(f.type_cover));

        // Refinements: I = I_F + I_notF, II = II_F + II_notF, each unique.
        const auto ref = refinement_centers(roman);
        REQUIRE(ref.size() == 4);
        CHECK(ref[0] == g.join(sc[0], sc[1]));
        CHECK(ref[1] == sc[2]);
        CHECK(ref[2] == sc[3]);
        CHECK(ref[3] == sc[4]);
        const std::vector<Role> first = {
            [](K kk, K ff) { return kk.locally && ff.type_k; },
            [](K kk, K ff) { return kk.locally && ff.properly; },
        };
        const std::vector<Role> second = {
            [](K kk, K ff) { return ff.locally && kk.purely && ff.type_k; },
            [](K kk, K ff) { return ff.locally && kk.purely && ff.properly; },
        };
        auto s1 = oracle_solutions(o, gamma, km, fm, first, rc[0]);
        auto s2 = oracle_solutions(o, gamma, km, fm, second, rc[1]);
        REQUIRE(s1.size() == 1);
        REQUIRE(s2.size() == 1);
        CHECK(s1[0] == as_ints({ref[0], ref[1]}));
        CHECK(s2[0] == as_ints({ref[2], ref[3]}));

        if (k.members == f.members) {
          CHECK(sc[1] == 0);
          CHECK(sc[3] == 0);
          CHECK(sc[4] == 0);
        }
      }
  }
}

TEST_CASE("derived fixture values") {
  SUBCASE("M3 with atoms inside monads collapses") {
    const Pea m3 = fixture("M3");
    const CentralStructure g = center(m3);
    const TDSet a = td_from_class(m3, g, "atoms"), h = td_from_class(m3, g, "monad");
    CHECK(a.members == h.members);
    CHECK(centers(decompose_six(m3, g, a, h)) == std::vector<Element>{0, 0, m3.one(), 0, 0, 0});
  }
  SUBCASE("MO2, atoms inside monads") {
    const Pea mo2 = fixture("MO2");
    const CentralStructure g = center(mo2);
    const TDSet a = td_from_class(mo2, g, "atoms"), h = td_from_class(mo2, g, "monad");
    CHECK(mo2.table().format(a.members) == "{0, a, a', b, b'}");
    CHECK(a.members == h.members);
    CHECK(centers(decompose_six(mo2, g, a, h)) == std::vector<Element>{0, 0, mo2.one(), 0, 0, 0});
    const DecompositionReport r = decompose_I_II_III(mo2, g, a, h);
    CHECK(centers(r) == std::vector<Element>{mo2.one(), 0, 0});
    CHECK(refinement_centers(r) == std::vector<Element>{0, mo2.one(), 0, 0});
  }
  SUBCASE("C2xM3, atoms inside monads") {
    const Pea e = fixture("C2xM3");
    const CentralStructure g = center(e);
    const DecompositionReport r =
        decompose_I_II_III(e, g, td_from_class(e, g, "atoms"), td_from_class(e, g, "monad"));
    CHECK(centers(r) == std::vector<Element>{e.one(), 0, 0});
    CHECK(refinement_centers(r) == std::vector<Element>{at(e, "(1,0)"), at(e, "(0,1)"), 0, 0});
    CHECK(find_isomorphism(r.refinements[0].algebra.algebra, fixture("C2")));
    CHECK(find_isomorphism(r.refinements[1].algebra.algebra, fixture("M3")));
  }
  SUBCASE("commutative inside weak-commutative on the non-commutative fixture") {
    const Pea e(load_peas(std::filesystem::path(PEA_FIXTURE_DIR) / "cyclic3.pea").at(0));
    const CentralStructure g = center(e);
    const DecompositionReport r =
        decompose_I_II_III(e, g, td_from_class(e, g, "commutative"), td_from_class(e, g, "weakcomm"));
    // Every proper interval is commutative, so the unit is locally type-K.
    CHECK(centers(r) == std::vector<Element>{e.one(), 0, 0});
  }
  SUBCASE("commutative inside weak-commutative where the two differ") {
    const PeaTable t = load_peas(std::filesystem::path(PEA_FIXTURE_DIR) / "weakcomm10.pea").at(0);
    const Pea e(t);
    const CentralStructure g = center(e);
    const TDSet k = td_from_class(e, g, "commutative"), f = td_from_class(e, g, "weakcomm");
    const DecompositionReport six = decompose_six(e, g, k, f);
    check_witness(e, six);
    // The unit is type-F, locally type-K and properly non-K.
    CHECK(centers(six) == std::vector<Element>{0, e.one(), 0, 0, 0, 0});
    const oracle::Table o(t);
    const auto sols = oracle_solutions(o, oracle::center(o), mask_of(k.members), mask_of(f.members), kSix, e.one());
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == as_ints(centers(six)));
    const DecompositionReport roman = decompose_I_II_III(e, g, k, f);
    CHECK(centers(roman) == std::vector<Element>{e.one(), 0, 0});
    CHECK(refinement_centers(roman) == std::vector<Element>{e.one(), 0, 0, 0});
  }
}

TEST_CASE("part algebras carry inherited labels") {
  const Pea e = fixture("C2xM3");
  const CentralStructure g = center(e);
  const DecompositionReport r = decompose_three(e, g, td_from_class(e, g, "atoms"));
  for (const auto& p : r.parts)
    for (Element x = 0; x < static_cast<Element>(p.algebra.algebra.size()); ++x)
      CHECK(p.algebra.algebra.display(x) == e.display(p.algebra.embedding[static_cast<std::size_t>(x)]));
}
