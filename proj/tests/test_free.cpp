#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "pg/free.hpp"
#include "pg/groups.hpp"
#include "pg/morphism.hpp"

using namespace pg;

TEST_CASE("free pointed carrier sizes and validation") {
  for (std::size_t k = 0; k <= 3; ++k) {
    std::vector<std::string> names{"1"};
    for (std::size_t i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    auto fp = free_pointed({names, 0});
    CHECK(fp.group->size() == 2 * k + 1);
    CHECK(validate_axioms(*fp.group, ValidationMode::Sampled, 8).ok());
  }
}

TEST_CASE("free pointed on a single point is the trivial group") {
  auto fp = free_pointed({{"1"}, 0});
  CHECK(fp.group->size() == 1);
  CHECK(fp.group->in_domain({0, 0, 0}));
}

TEST_CASE("universal_map_pointed produces the induced morphisms") {
  auto fp = free_pointed({{"1", "a", "b"}, 0});
  PGroup k = klein_group();
  ElementId x = *k->find("x"), y = *k->find("y"), xy = *k->find("xy");
  Morphism f = universal_map_pointed(fp, k, {0, x, y});
  CHECK(f.apply(*fp.group->find("a")) == x);
  CHECK(f.apply(*fp.group->find("a^")) == x);  // x is its own inverse
  CHECK(f.apply(*fp.group->find("b")) == y);
  CHECK(check_morphism(f, 8).ok());
  Morphism g = universal_map_pointed(fp, k, {0, xy, x});
  CHECK(check_morphism(g, 8).ok());

  Morphism constant = universal_map_pointed(fp, k, {0, 0, 0});
  CHECK(constant.map == trivial_map(fp.group, k).map);
  CHECK_THROWS_AS(universal_map_pointed(fp, k, {x, x, y}), std::invalid_argument);
}

TEST_CASE("adjunction bijection by counting on small targets") {
  auto fp = free_pointed({{"1", "a"}, 0});
  std::vector<PGroup> corpus = {trivial_group(), cyclic_group(2), cyclic_group(3),
                                cyclic_group(4), klein_group()};
  for (const PGroup& target : corpus) {
    // pointed maps {1,a} -> target: a can go anywhere
    std::size_t pointed = target->size();
    // morphisms (X,1)F -> target among all carrier maps
    std::size_t morphisms = 0;
    for (const auto& map : oracle::all_maps(fp.group->size(), target->size()))
      if (check_morphism(Morphism{fp.group, target, map}, 6).ok()) ++morphisms;
    CHECK(morphisms == pointed);
  }
}

TEST_CASE("adjunction counting with two generators") {
  auto fp = free_pointed({{"1", "a", "b"}, 0});
  for (const PGroup& target : {trivial_group(), cyclic_group(2), cyclic_group(3)}) {
    std::size_t pointed = target->size() * target->size();
    std::size_t morphisms = 0;
    for (const auto& map : oracle::all_maps(fp.group->size(), target->size()))
      if (check_morphism(Morphism{fp.group, target, map}, 6).ok()) ++morphisms;
    CHECK(morphisms == pointed);
  }
}

TEST_CASE("universal maps are natural in both arguments") {
  // pre-composing with a pointed map and post-composing with a morphism
  // matches the universal extension of the composite data
  auto fy = free_pointed({{"1", "c"}, 0});
  auto fx = free_pointed({{"1", "a", "b"}, 0});
  PGroup k = klein_group(), z2 = cyclic_group(2);
  // g : (Y,1) -> (X,1), c -> b ; its free image gF
  Morphism gF = universal_map_pointed(fy, fx.group, {0, *fx.group->find("b")});
  // f : (X,1) -> U(Klein)
  Morphism ft = universal_map_pointed(fx, k, {0, *k->find("x"), *k->find("y")});
  // h : Klein -> Z/2 killing x
  Morphism h{k, z2, {0, 0, 1, 1}};
  REQUIRE(check_morphism(h, 4).ok());
  Morphism left = compose(compose(gF, ft), h);
  // right side: extend the composite pointed data c -> h(f(b))
  Morphism right = universal_map_pointed(fy, z2, {0, h.apply(ft.apply(*fx.group->find("b")))});
  CHECK(left.map == right.map);
}

TEST_CASE("gx arithmetic reduces free products of cyclic factors") {
  // a is involution-paired with b; c is fixed (order 2)
  SetSObject x{{"a", "b", "c"}, {1, 0, 2}, {}};
  GxContext ctx(x);
  CHECK(ctx.embed_word({0, 1}).identity());        // mu(a, i(a)) = 1
  CHECK(ctx.embed_word({}).identity());            // mu of the empty word
  CHECK(ctx.embed_word({2, 2, 2}) == ctx.embed_letter(2));  // fixed: c^3 = c
  CHECK(ctx.embed_word({0, 0}) == GxElement{{{0, 2}}});     // a^2 survives

  // associativity and inverse laws on random words
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 2), len(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    auto rand_word = [&] {
      Word w(static_cast<std::size_t>(len(rng)));
      for (auto& e : w) e = letter(rng);
      return w;
    };
    Word u = rand_word(), v = rand_word(), w = rand_word();
    GxElement gu = ctx.embed_word(u), gv = ctx.embed_word(v), gw = ctx.embed_word(w);
    CHECK(ctx.multiply(ctx.multiply(gu, gv), gw) == ctx.multiply(gu, ctx.multiply(gv, gw)));
    CHECK(ctx.multiply(ctx.invert(gu), gu).identity());
    CHECK(ctx.multiply(gu, ctx.invert(gu)).identity());
    // mu is a monoid homomorphism
    CHECK(ctx.embed_word(concat(u, v)) == ctx.multiply(gu, gv));
  }

  // abelianization cross-check: exponent sums per orbit (mod 2 when fixed)
  for (int trial = 0; trial < 100; ++trial) {
    Word u;
    for (int i = 0; i < 8; ++i) u.push_back(letter(rng));
    long sum_ab = 0, sum_c = 0;
    for (ElementId e : u) {
      if (e == 0) ++sum_ab;
      if (e == 1) --sum_ab;
      if (e == 2) ++sum_c;
    }
    long got_ab = 0, got_c = 0;
    for (const auto& s : ctx.embed_word(u).syllables) {
      if (s.orbit == ctx.embed_letter(0).syllables[0].orbit) got_ab += s.exp;
      if (s.orbit == ctx.embed_letter(2).syllables[0].orbit) got_c += s.exp;
    }
    CHECK(got_ab == sum_ab);
    CHECK(((got_c - sum_c) % 2 + 2) % 2 == 0);
  }
}

TEST_CASE("free_sets over a single fixed point") {
  SetSObject x{{"x"}, {0}, {}};
  auto f = free_sets(x);
  CHECK_FALSE(f.truncated);
  CHECK(f.group->size() == 2);  // identity and x
  CHECK(validate_axioms(*f.group, ValidationMode::Exhaustive).ok());
  ElementId gx = f.generator_embedding[0];
  CHECK(f.group->in_domain({gx, gx}));  // axiom 4 for the singleton
  CHECK(f.group->product({gx, gx}) == f.group->unit());
}

TEST_CASE("free_sets over the carrier of Z/2 saturates completely") {
  PGroup z2 = cyclic_group(2);
  SetSObject x{z2->names(), z2->inv_table(), {}};
  for (const Word& w : domain_words(*z2, 3))
    if (w.size() >= 2) x.marked_words.push_back(w);
  auto f = free_sets(x);
  CHECK_FALSE(f.truncated);
  // the unit letter is an ordinary order-2 generator, so G_X is infinite
  // dihedral and the closure stops at the seven elements reachable from
  // length-3 marked words
  CHECK(f.group->size() == 7);
  CHECK(validate_axioms(*f.group, ValidationMode::Exhaustive).ok());
  // contains (X)mu and the marked words
  for (ElementId e : f.generator_embedding) CHECK(f.group->valid_id(e));
  for (const Word& s : x.marked_words) {
    Word local(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      local[i] = f.generator_embedding[static_cast<std::size_t>(s[i])];
    CHECK(f.group->in_domain(local));
  }
}

TEST_CASE("free_sets over the carrier of Z/3 with short marked words stays finite") {
  // contraction, subword and padding closure of length-2 words never forces
  // (a^2, a), so the object closes at ten elements
  PGroup z3 = cyclic_group(3);
  SetSObject x{z3->names(), z3->inv_table(), {}};
  for (const Word& w : domain_words(*z3, 2))
    if (w.size() >= 2) x.marked_words.push_back(w);
  auto f = free_sets(x);
  CHECK_FALSE(f.truncated);
  CHECK(f.group->size() == 10);
  CHECK(validate_axioms(*f.group, ValidationMode::Exhaustive).ok());
}

TEST_CASE("free_sets growth is truncated by the element bound") {
  // with marked words up to length 6 the powers of the Z/3 generator force
  // unboundedly many new elements
  PGroup z3 = cyclic_group(3);
  SetSObject x{z3->names(), z3->inv_table(), {}};
  for (const Word& w : domain_words(*z3, 6))
    if (w.size() >= 2) x.marked_words.push_back(w);
  SaturationBounds b;
  b.max_word_len = 6;
  b.max_elements = 64;
  auto f = free_sets(x, b);
  CHECK(f.truncated);
  CHECK(f.group->size() <= 64);
}

TEST_CASE("free_sets bounds below minimum are rejected") {
  SetSObject x{{"a", "b"}, {1, 0}, {{0, 1, 0, 1, 0, 1, 0, 1, 0}}};
  SaturationBounds tiny;
  tiny.max_elements = 2;
  CHECK_THROWS_AS(free_sets(x, tiny), std::invalid_argument);
  SaturationBounds short_words;
  short_words.max_word_len = 4;  // marked word has length 9
  CHECK_THROWS_AS(free_sets(x, short_words), std::invalid_argument);
}

TEST_CASE("free_sets minimality on a tiny instance") {
  SetSObject x{{"x"}, {0}, {}};
  auto f = free_sets(x);
  // every carrier element is the unit, a generator image, or the product of
  // a domain word; nothing is removable
  const auto* entries = table_entries(f.group->domain());
  REQUIRE(entries);
  for (ElementId e = 0; e < static_cast<ElementId>(f.group->size()); ++e) {
    bool forced = e == f.group->unit();
    for (ElementId g : f.generator_embedding) forced = forced || g == e;
    if (forced) continue;
    bool used = false;
    for (const auto& [w, p] : *entries)
      used = used || p == e || std::find(w.begin(), w.end(), e) != w.end();
    CHECK(used);
  }
}

TEST_CASE("universal_map_sets extends generator data uniquely") {
  PGroup z2 = cyclic_group(2);
  SetSObject x{z2->names(), z2->inv_table(), {}};
  for (const Word& w : domain_words(*z2, 3))
    if (w.size() >= 2) x.marked_words.push_back(w);
  auto f = free_sets(x);
  REQUIRE_FALSE(f.truncated);

  // identity data: the counit onto Z/2 itself
  Morphism counit = universal_map_sets(f, x, z2, {0, 1});
  CHECK(check_morphism(counit, 6).ok());
  std::set<ElementId> image(counit.map.begin(), counit.map.end());
  CHECK(image.size() == 2);  // surjective

  // into the trivial group: the trivial map
  Morphism tr = universal_map_sets(f, x, trivial_group(), {0, 0});
  CHECK(tr.map == trivial_map(f.group, trivial_group()).map);

  // generator embedding into the free object itself gives the identity
  Morphism self = universal_map_sets(f, x, f.group, f.generator_embedding);
  for (ElementId c = 0; c < static_cast<ElementId>(f.group->size()); ++c)
    CHECK(self.apply(c) == c);
}

TEST_CASE("universal_map_sets refuses truncated objects and bad data") {
  PGroup z3 = cyclic_group(3);
  SetSObject x{z3->names(), z3->inv_table(), {}};
  for (const Word& w : domain_words(*z3, 6))
    if (w.size() >= 2) x.marked_words.push_back(w);
  SaturationBounds b;
  b.max_word_len = 6;
  b.max_elements = 64;
  auto f = free_sets(x, b);
  REQUIRE(f.truncated);
  CHECK_THROWS_AS(universal_map_sets(f, x, z3, {0, 1, 2}), std::invalid_argument);

  SetSObject y{{"x"}, {0}, {}};
  auto fy = free_sets(y);
  // x is involution-fixed, so its image must be an involution
  CHECK_THROWS_AS(universal_map_sets(fy, y, cyclic_group(3), {1}), std::invalid_argument);
}
