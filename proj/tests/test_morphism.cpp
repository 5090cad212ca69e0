#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "pg/free.hpp"
#include "pg/groups.hpp"
#include "pg/morphism.hpp"

using namespace pg;

namespace {

struct CounterexampleData {
  FreePartialGroup fp;  // free pointed on {1,a,b}
  PGroup klein;
  Morphism f;  // a -> x, b -> y
  Morphism g;  // a -> xy, b -> x
};

CounterexampleData counterexample() {
  CounterexampleData d{free_pointed({{"1", "a", "b"}, 0}), klein_group(), {}, {}};
  ElementId x = *d.klein->find("x"), y = *d.klein->find("y"), xy = *d.klein->find("xy");
  d.f = universal_map_pointed(d.fp, d.klein, {0, x, y});
  d.g = universal_map_pointed(d.fp, d.klein, {0, xy, x});
  return d;
}

}  // namespace

TEST_CASE("check_morphism accepts the induced counterexample maps") {
  auto d = counterexample();
  CHECK(check_morphism(d.f, 8).ok());
  CHECK(check_morphism(d.g, 8).ok());
  CHECK(check_morphism(identity_morphism(d.klein), 6).ok());
}

TEST_CASE("check_morphism rejects a non-homomorphism with witness") {
  PGroup z2 = cyclic_group(2), z3 = cyclic_group(3);
  Morphism bad{z2, z3, {0, 1}};  // generator to generator
  auto rep = check_morphism(bad, 4);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.axiom == 2 && v.witness == Word{1, 1}) found = true;
  CHECK(found);
}

TEST_CASE("compose and trivial maps") {
  auto d = counterexample();
  Morphism id = identity_morphism(d.klein);
  CHECK(compose(d.f, id).map == d.f.map);
  Morphism triv = trivial_map(d.fp.group, d.klein);
  CHECK(check_morphism(triv, 6).ok());
  CHECK(compose(triv, id).map == triv.map);
  // composing through the trivial map stays trivial
  Morphism h{d.klein, d.klein, {0, *d.klein->find("y"), *d.klein->find("x"), *d.klein->find("xy")}};
  for (ElementId v : compose(triv, h).map) CHECK(v == d.klein->unit());
  CHECK_THROWS_AS(compose(d.f, d.f), std::invalid_argument);
}

TEST_CASE("generator maps between cyclic groups compose pointwise") {
  PGroup z6 = cyclic_group(6), z3 = cyclic_group(3);
  Morphism mod3{z6, z3, {0, 1, 2, 0, 1, 2}};
  CHECK(check_morphism(mod3, 5).ok());
  Morphism dbl{z3, z3, {0, 2, 1}};
  CHECK(check_morphism(dbl, 5).ok());
  Morphism c = compose(mod3, dbl);
  for (ElementId k = 0; k < 6; ++k) CHECK(c.apply(k) == (2 * k) % 3);
}

TEST_CASE("image of identity and trivial maps") {
  PGroup k = klein_group();
  ImpartialSubgroup whole = image(identity_morphism(k));
  CHECK(whole.subset.size() == 4);
  CHECK(whole.sub->in_domain({1, 2, 3}));
  ImpartialSubgroup unit = image(trivial_map(k, k));
  CHECK(unit.subset == std::vector<ElementId>{k->unit()});
  CHECK(unit.sub->in_domain({0, 0, 0}));
}

TEST_CASE("image of the counterexample map is impartial but not full") {
  auto d = counterexample();
  ImpartialSubgroup im = image(d.f);
  // subset {1, x, y}
  std::vector<ElementId> expect{d.klein->unit(), *d.klein->find("x"), *d.klein->find("y")};
  std::sort(expect.begin(), expect.end());
  CHECK(im.subset == expect);
  ElementId lx = *im.sub->find("x"), ly = *im.sub->find("y");
  CHECK(im.sub->in_domain({lx, lx}));        // image of (a, a^)
  CHECK(im.sub->in_domain({lx, lx, lx}));    // image of (a, a^, a)
  CHECK_FALSE(im.sub->in_domain({lx, ly}));  // never an image of an alternating word
  CHECK(validate_axioms(*im.sub, ValidationMode::Exhaustive).ok());
  CHECK(check_morphism(im.inclusion(), 5).ok());
}

TEST_CASE("kernel computes the equalizer with the trivial map") {
  PGroup z6 = cyclic_group(6), z3 = cyclic_group(3);
  ImpartialSubgroup id_ker = kernel(identity_morphism(z6));
  CHECK(id_ker.subset == std::vector<ElementId>{0});
  ImpartialSubgroup all_ker = kernel(trivial_map(z6, z3));
  CHECK(all_ker.subset.size() == 6);
  Morphism mod3{z6, z3, {0, 1, 2, 0, 1, 2}};
  ImpartialSubgroup ker = kernel(mod3);
  CHECK(ker.subset == std::vector<ElementId>{0, 3});
  // full words over the kernel
  ElementId l3 = *ker.sub->find("3");
  CHECK(ker.sub->in_domain({l3, l3, l3}));
  CHECK(ker.sub->product({l3, l3}) == ker.sub->unit());
  CHECK(validate_axioms(*ker.sub, ValidationMode::Exhaustive).ok());
}

TEST_CASE("kernel domain is exactly D ∩ W(subset)") {
  PGroup z6 = cyclic_group(6), z3 = cyclic_group(3);
  Morphism mod3{z6, z3, {0, 1, 2, 0, 1, 2}};
  ImpartialSubgroup ker = kernel(mod3);
  for (const Word& w : oracle::all_words(ker.sub->size(), 4)) {
    Word pw(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      pw[i] = ker.to_parent[static_cast<std::size_t>(w[i])];
    CHECK(ker.sub->in_domain(w) == z6->in_domain(pw));
  }
}

TEST_CASE("morphisms preserve unit and inversion") {
  auto d = counterexample();
  for (const Morphism* m : {&d.f, &d.g}) {
    CHECK(m->apply(m->source->unit()) == m->target->unit());
    for (ElementId x = 0; x < static_cast<ElementId>(m->source->size()); ++x)
      CHECK(m->apply(m->source->inv(x)) == m->target->inv(m->apply(x)));
  }
}

TEST_CASE("find_isomorphism basics") {
  PGroup k = klein_group();
  auto self = find_isomorphism(k, k);
  REQUIRE(self.has_value());
  CHECK(check_morphism(*self, 4).ok());

  // Z/4 vs Klein: same size, not isomorphic
  CHECK_FALSE(find_isomorphism(cyclic_group(4), klein_group()).has_value());

  // relabeled copy of Z/4 with element order permuted: old k -> (k+2) mod 4
  PGroup z4 = cyclic_group(4);
  std::vector<std::vector<ElementId>> shuffled = {
      {2, 3, 0, 1}, {3, 0, 1, 2}, {0, 1, 2, 3}, {1, 2, 3, 0}};
  PGroup z4b = group_from_table({"p2", "p3", "p0", "p1"}, 2, shuffled);
  CHECK(validate_axioms(*z4b, ValidationMode::Exhaustive).ok());
  auto iso = find_isomorphism(z4, z4b);
  REQUIRE(iso.has_value());
  CHECK(check_morphism(*iso, 4).ok());
}

TEST_CASE("find_isomorphism demands equal domains, not just carriers") {
  // forced closure of {(g,g)} on a 2-element carrier is all of W, so this
  // table presents the same partial group as the full Z/2
  PGroup z2 = cyclic_group(2);
  PGroup t = make_partial_group({"0", "1"}, 0, {0, 1}, table_domain({{{1, 1}, 0}}));
  CHECK(find_isomorphism(z2, t).has_value());

  // Klein vs. a table Klein missing length-3 words: not isomorphic
  PGroup k = klein_group();
  std::vector<std::pair<Word, ElementId>> pairs;
  for (ElementId a = 1; a < 4; ++a)
    for (ElementId b = 1; b < 4; ++b) pairs.emplace_back(Word{a, b}, k->product({a, b}));
  PGroup kt = make_partial_group(k->names(), 0, k->inv_table(), table_domain(pairs));
  CHECK(kt->in_domain({1, 2}));
  CHECK_FALSE(kt->in_domain({1, 2, 3}));
  CHECK_FALSE(find_isomorphism(k, kt).has_value());
}

TEST_CASE("find_isomorphism witnesses invert to morphisms") {
  PGroup a = cyclic_group(6);
  std::vector<std::vector<ElementId>> mul(6, std::vector<ElementId>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      mul[i][j] = static_cast<ElementId>((i + j) % 6);
  PGroup b = group_from_table({"u", "v", "w", "p", "q", "r"}, 0, mul);
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  CHECK(check_morphism(*iso, 4).ok());
  std::vector<ElementId> back(iso->map.size());
  for (std::size_t i = 0; i < iso->map.size(); ++i)
    back[static_cast<std::size_t>(iso->map[i])] = static_cast<ElementId>(i);
  CHECK(check_morphism(Morphism{b, a, back}, 4).ok());
}

TEST_CASE("find_isomorphism rejects oracle domains") {
  PGroup f = free_pointed({{"1", "a"}, 0}).group;
  CHECK_THROWS_AS(find_isomorphism(f, f), UnsupportedModeError);
}
