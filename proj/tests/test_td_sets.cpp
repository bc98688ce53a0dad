#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracle.hpp"

#include "pea/center.hpp"
#include "pea/errors.hpp"
#include "pea/fixtures.hpp"
#include "pea/td_sets.hpp"

#include <functional>

using namespace pea;

namespace {

Pea fixture(const std::string& name) { return Pea(builtin_fixture(name)); }

ElementSet set_of(const Pea& e, std::initializer_list<const char*> labels) {
  ElementSet s(e.size());
  for (const char* l : labels) {
    const Element x = e.table().find(l);
    REQUIRE(x != kUndefined);
    s.insert(x);
  }
  return s;
}

oracle::Mask mask_of(const ElementSet& s) {
  oracle::Mask m = 0;
  s.for_each([&](Element x) { m |= 1u << x; });
  return m;
}

ElementSet from_mask(std::size_t n, oracle::Mask m) { return ElementSet::from_mask(n, m); }

// Calls f(e, g, Q) for every corpus algebra with at most five elements and
// every subset Q of its carrier.
void for_all_subsets(const std::function<void(const Pea&, const CentralStructure&, const ElementSet&)>& f) {
  for (const auto& t : testing::corpus5()) {
    const Pea e(t);
    const CentralStructure g = center(e);
    for (oracle::Mask m = 0; m < (1u << e.size()); ++m) f(e, g, from_mask(e.size(), m));
  }
}

}  // namespace

TEST_CASE("closure examples") {
  const Pea b4 = fixture("B4"), mo2 = fixture("MO2"), m3 = fixture("M3"), c2m3 = fixture("C2xM3");
  const CentralStructure gb = center(b4), gmo = center(mo2), gm = center(m3), gc = center(c2m3);

  CHECK(closure_sup(b4, gb, ElementSet(4)) == set_of(b4, {"0"}));
  CHECK(closure_sup(b4, gb, set_of(b4, {"p", "q"})) == ElementSet::full(4));
  CHECK(closure_sup(mo2, gmo, set_of(mo2, {"a", "a'", "b", "b'"})) == set_of(mo2, {"0", "a", "a'", "b", "b'"}));

  CHECK(closure_gamma(b4, gb, ElementSet(4)).empty());
  CHECK(closure_gamma(m3, gm, set_of(m3, {"a"})) == set_of(m3, {"0", "a"}));
  CHECK(closure_gamma(c2m3, gc, set_of(c2m3, {"(1,a)"})) == set_of(c2m3, {"(0,0)", "(1,0)", "(0,a)", "(1,a)"}));

  CHECK(closure_down(m3, set_of(m3, {"1"})) == ElementSet::full(3));
  CHECK(closure_down(m3, set_of(m3, {"a"})) == set_of(m3, {"0", "a"}));
  CHECK(closure_down(mo2, set_of(mo2, {"a", "b"})) == set_of(mo2, {"0", "a", "b"}));

  CHECK(commutant(mo2, ElementSet(6)) == ElementSet::full(6));
  CHECK(commutant(mo2, set_of(mo2, {"a"})) == set_of(mo2, {"0", "a'", "b", "b'"}));
  CHECK(commutant(mo2, set_of(mo2, {"1"})) == set_of(mo2, {"0"}));
}

TEST_CASE("TD and STD examples") {
  const Pea m3 = fixture("M3"), b4 = fixture("B4"), mo2 = fixture("MO2");
  const CentralStructure gm = center(m3), gb = center(b4), gmo = center(mo2);
  CHECK(is_td(m3, gm, set_of(m3, {"0"})));
  CHECK(is_std(m3, gm, set_of(m3, {"0"})));
  CHECK(is_std(m3, gm, set_of(m3, {"0", "a"})));
  CHECK_FALSE(is_td(m3, gm, set_of(m3, {"a"})));

  // Central intervals are TD.
  for (Element c : gb.members()) {
    ElementSet s(4);
    for (Element d : gb.members())
      if (b4.leq(d, c)) s.insert(d);
    CHECK(is_td(b4, gb, s));
  }

  CHECK(td_generated(m3, gm, ElementSet(3)).members == set_of(m3, {"0"}));
  CHECK(td_generated(m3, gm, set_of(m3, {"a"})).members == set_of(m3, {"0", "a"}));
  CHECK(std_generated(mo2, gmo, set_of(mo2, {"1"})).members == ElementSet::full(6));

  const TDSet zero = make_td_set(m3, gm, set_of(m3, {"0"}));
  CHECK(zero.type_cover == 0);
  CHECK(zero.restricted_type_cover == 0);
  const TDSet am3 = make_td_set(m3, gm, set_of(m3, {"0", "a"}));
  CHECK(am3.type_cover == m3.one());
  CHECK(am3.restricted_type_cover == 0);
  const TDSet ab4 = make_td_set(b4, gb, ElementSet::full(4));
  CHECK(ab4.type_cover == b4.one());
  CHECK(ab4.restricted_type_cover == b4.one());
  CHECK_THROWS_AS(make_td_set(m3, gm, set_of(m3, {"a"})), DomainError);
}

TEST_CASE("classification examples") {
  const Pea m3 = fixture("M3"), b4 = fixture("B4");
  const CentralStructure gm = center(m3), gb = center(b4);
  const TDSet am3 = make_td_set(m3, gm, set_of(m3, {"0", "a"}));
  const CentralKind zero = classify_central(m3, gm, am3, 0);
  CHECK((zero.type_k && zero.locally_type_k && zero.purely_non_k && zero.properly_non_k));
  const CentralKind one = classify_central(m3, gm, am3, m3.one());
  CHECK(one.locally_type_k);
  CHECK_FALSE(one.type_k);
  CHECK(one.properly_non_k);
  CHECK_FALSE(one.purely_non_k);
  CHECK(classify_central(b4, gb, make_td_set(b4, gb, ElementSet::full(4)), b4.one()).type_k);
  CHECK_THROWS_AS(classify_central(m3, gm, am3, m3.table().find("a")), DomainError);
}

TEST_CASE("closures match the oracle on every subset") {
  for (const auto& t : testing::corpus5()) {
    const Pea e(t);
    const oracle::Table o(t);
    const CentralStructure g = center(e);
    const auto gamma = oracle::center(o);
    for (oracle::Mask m = 0; m < (1u << e.size()); ++m) {
      const ElementSet q = from_mask(e.size(), m);
      CHECK(mask_of(closure_sup(e, g, q)) == oracle::closure_sup(o, gamma, m));
      CHECK(mask_of(closure_gamma(e, g, q)) == oracle::closure_gamma(o, gamma, m));
      CHECK(mask_of(closure_down(e, q)) == oracle::closure_down(o, m));
      CHECK(mask_of(commutant(e, q)) == oracle::commutant(o, m));
      CHECK(is_td(e, g, q) == oracle::is_td(o, gamma, m));
      CHECK(is_std(e, g, q) == oracle::is_std(o, gamma, m));
      CHECK(mask_of(td_generated(e, g, q).members) == oracle::td_generated(o, gamma, m));
    }
  }
}

TEST_CASE("closure operator laws") {
  using Op = std::function<ElementSet(const Pea&, const CentralStructure&, const ElementSet&)>;
  const std::vector<std::pair<const char*, Op>> ops = {
      {"sup", [](const Pea& e, const CentralStructure& g, const ElementSet& q) { return closure_sup(e, g, q); }},
      {"gamma", [](const Pea& e, const CentralStructure& g, const ElementSet& q) { return closure_gamma(e, g, q); }},
      {"down", [](const Pea& e, const CentralStructure&, const ElementSet& q) { return closure_down(e, q); }},
      {"bicommutant", [](const Pea& e, const CentralStructure&, const ElementSet& q) { return bicommutant(e, q); }},
  };
  for (const auto& [name, op] : ops) {
    CAPTURE(name);
    for (const auto& t : testing::corpus5()) {
      const Pea e(t);
      const CentralStructure g = center(e);
      const oracle::Mask full = (1u << e.size()) - 1;
      std::vector<ElementSet> image;
      for (oracle::Mask m = 0; m <= full; ++m) image.push_back(op(e, g, from_mask(e.size(), m)));
      for (oracle::Mask m = 0; m <= full; ++m) {
        const ElementSet q = from_mask(e.size(), m);
        // [.] adds 0 to the empty set; the other operators are extensive.
        CHECK(q.is_subset_of(image[m]));
        CHECK(op(e, g, image[m]) == image[m]);
        for (oracle::Mask r = m; r <= full; r = (r + 1) | m)
          if ((r & m) == m) CHECK(image[m].is_subset_of(image[r]));
      }
    }
  }
}

TEST_CASE("commutants") {
  for_all_subsets([](const Pea& e, const CentralStructure& g, const ElementSet& q) {
    const ElementSet c = commutant(e, q);
    CHECK(c == commutant(e, closure_sup(e, g, closure_gamma(e, g, q))));
    CHECK(c == commutant(e, closure_sup(e, g, closure_down(e, q))));
    CHECK(is_std(e, g, c));
    CHECK(is_std(e, g, bicommutant(e, q)));
  });
}

TEST_CASE("generated TD sets and their covers") {
  for_all_subsets([](const Pea& e, const CentralStructure& g, const ElementSet& q) {
    const TDSet k = td_generated(e, g, q);
    CHECK(k.td);
    CHECK(q.is_subset_of(k.members));
    const TDSet s = std_generated(e, g, q);
    CHECK(s.std);
    CHECK(k.members.is_subset_of(s.members));

    // gamma K = Gamma[0, c_K] and K ^ gamma K = K ^ Gamma = Gamma[0, c_{K ^ gamma K}].
    ElementSet gamma_k(e.size()), k_center(e.size()), below_ck(e.size()), below_rk(e.size());
    k.members.for_each([&](Element x) { gamma_k.insert(g.cover(x)); });
    for (Element c : g.members()) {
      if (k.members.contains(c)) k_center.insert(c);
      if (e.leq(c, k.type_cover)) below_ck.insert(c);
      if (e.leq(c, k.restricted_type_cover)) below_rk.insert(c);
    }
    CHECK(gamma_k == below_ck);
    CHECK((k.members & gamma_k) == k_center);
    CHECK(k_center == below_rk);
    CHECK(is_td(e, g, gamma_k));
    CHECK(is_td(e, g, k.members & gamma_k));

    // The restricted cover of K' is the complement of c_K.
    const TDSet kc = make_td_set(e, g, commutant(e, k.members));
    CHECK(kc.restricted_type_cover == g.complement(k.type_cover));
  });
}

TEST_CASE("classification agrees with the definitions") {
  for (const auto& t : testing::corpus5()) {
    const Pea e(t);
    const oracle::Table o(t);
    const CentralStructure g = center(e);
    const auto gamma = oracle::center(o);
    for (oracle::Mask m = 0; m < (1u << e.size()); ++m) {
      for (const bool strong : {false, true}) {
        const ElementSet q = from_mask(e.size(), m);
        const TDSet k = strong ? std_generated(e, g, q) : td_generated(e, g, q);
        for (Element c : g.members()) {
          const CentralKind got = classify_central(e, g, k, c);
          const oracle::Kind want = oracle::classify(o, gamma, mask_of(k.members), c);
          CHECK(got.type_k == want.type_k);
          CHECK(got.locally_type_k == want.locally);
          CHECK(got.purely_non_k == want.purely);
          CHECK(got.properly_non_k == want.properly);
          if (strong) CHECK(got.type_k == closure_down(e, ElementSet(e.size(), {c})).is_subset_of(k.members));
        }
      }
    }
  }
}
