#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "pg/free.hpp"
#include "pg/groups.hpp"
#include "pg/limits.hpp"
#include "pg/quotient.hpp"

using namespace pg;

TEST_CASE("classify_subset flags the unit and the whole carrier as normal") {
  PGroup k = klein_group();
  auto unit = classify_subset(k, {k->unit()});
  CHECK(unit.impartial);
  CHECK(unit.partial);
  CHECK(unit.partial_normal);
  std::vector<ElementId> all{0, 1, 2, 3};
  auto whole = classify_subset(k, all);
  CHECK(whole.partial_normal);
}

TEST_CASE("classify_subset on Z/6 subsets") {
  PGroup z6 = cyclic_group(6);
  auto even = classify_subset(z6, {0, 2, 4});
  CHECK(even.partial_normal);
  auto not_closed = classify_subset(z6, {0, 1});
  CHECK_FALSE(not_closed.impartial);
  CHECK_FALSE(not_closed.partial);
  CHECK_FALSE(not_closed.partial_normal);
}

TEST_CASE("classify flags satisfy the implication chain on random subsets") {
  std::mt19937 rng(11);
  for (const PGroup& g : {cyclic_group(6), klein_group(), symmetric3()}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<ElementId> subset{g->unit()};
      for (ElementId x = 0; x < static_cast<ElementId>(g->size()); ++x)
        if (rng() % 2) subset.push_back(x);
      auto w = classify_subset(g, subset);
      if (w.partial_normal) CHECK(w.partial);
      if (w.partial) CHECK(w.impartial);
    }
  }
}

TEST_CASE("an impartial-but-not-partial witness via a chosen sub-domain") {
  auto fp = free_pointed({{"1", "a"}, 0});
  PGroup k = klein_group();
  Morphism f = universal_map_pointed(fp, k, {0, *k->find("x")});
  ImpartialSubgroup im = image(f);
  auto w = classify_subset(k, im.subset, im.sub->domain_ptr());
  CHECK(w.impartial);
  CHECK(w.partial);  // {1,x} with alternating image words carries all of D ∩ W

  // three-generator image in the Klein group: {1,x,y} misses (x,y)
  auto fp2 = free_pointed({{"1", "a", "b"}, 0});
  Morphism f2 = universal_map_pointed(fp2, k, {0, *k->find("x"), *k->find("y")});
  ImpartialSubgroup im2 = image(f2);
  auto w2 = classify_subset(k, im2.subset, im2.sub->domain_ptr());
  CHECK(w2.impartial);
  CHECK_FALSE(w2.partial);
}

TEST_CASE("generated_partial_subgroup on groups matches cyclic subgroups") {
  PGroup z6 = cyclic_group(6);
  auto unit = generated_partial_subgroup(z6, {0});
  CHECK(unit.subgroup.subset == std::vector<ElementId>{0});
  auto two = generated_partial_subgroup(z6, {2});
  CHECK(two.subgroup.subset == std::vector<ElementId>{0, 2, 4});
  CHECK(two.partial_normal);
  // idempotent and monotone
  auto again = generated_partial_subgroup(z6, two.subgroup.subset);
  CHECK(again.subgroup.subset == two.subgroup.subset);
  auto bigger = generated_partial_subgroup(z6, {2, 3});
  for (ElementId x : two.subgroup.subset)
    CHECK(std::binary_search(bigger.subgroup.subset.begin(), bigger.subgroup.subset.end(), x));
}

TEST_CASE("generated_partial_subgroup in a truncated free pointed group") {
  PGroup f = free_pointed({{"1", "a", "b"}, 0}).group;
  std::vector<std::pair<Word, ElementId>> entries;
  for (const Word& w : domain_words(*f, 4))
    if (w.size() >= 2) entries.emplace_back(w, f->product(w));
  PGroup ft = make_partial_group(f->names(), 0, f->inv_table(), table_domain(entries));
  auto sub = generated_partial_subgroup(ft, {*ft->find("a")});
  std::vector<ElementId> expect{0, *ft->find("a"), *ft->find("a^")};
  std::sort(expect.begin(), expect.end());
  CHECK(sub.subgroup.subset == expect);
}

TEST_CASE("intersect_impartial") {
  PGroup z6 = cyclic_group(6);
  auto two = generated_partial_subgroup(z6, {2});
  auto three = generated_partial_subgroup(z6, {3});
  auto whole = generated_partial_subgroup(z6, {1});
  auto meet = intersect_impartial({two, three});
  CHECK(meet.subgroup.subset == std::vector<ElementId>{0});
  auto with_whole = intersect_impartial({two, whole});
  CHECK(with_whole.subgroup.subset == two.subgroup.subset);
  CHECK(with_whole.impartial);
}

TEST_CASE("quotient by the unit subgroup is the group itself") {
  PGroup k = klein_group();
  auto unit = classify_subset(k, {k->unit()});
  Quotient q = quotient(k, unit);
  CHECK(find_isomorphism(q.group, k).has_value());
}

TEST_CASE("inclusion followed by the quotient projection is the trivial map") {
  PGroup z6 = cyclic_group(6);
  auto h = classify_subset(z6, {0, 3});
  Quotient q = quotient(z6, h);
  Morphism comp = compose(h.subgroup.inclusion(), q.projection);
  CHECK(comp.map == trivial_map(h.subgroup.sub, q.group).map);
}

TEST_CASE("quotient of Z/6 by {0,3} is Z/3") {
  PGroup z6 = cyclic_group(6);
  auto h = classify_subset(z6, {0, 3});
  REQUIRE(h.partial_normal);
  Quotient q = quotient(z6, h);
  CHECK(q.group->size() == 3);
  CHECK(find_isomorphism(q.group, cyclic_group(3)).has_value());
}

TEST_CASE("quotients by an impartial subgroup and by its generated closure agree") {
  // image of the one-generator free pointed group inside Z/4: subset {0,1,3}
  // with alternating-word domain, not closed under products
  PGroup z4 = cyclic_group(4);
  auto fp = free_pointed({{"1", "a"}, 0});
  Morphism f = universal_map_pointed(fp, z4, {0, 1});
  ImpartialSubgroup n = image(f);
  auto wn = classify_subset(z4, n.subset, n.sub->domain_ptr());
  REQUIRE(wn.impartial);
  CHECK_FALSE(wn.partial);
  SubgroupWitness m = generated_partial_subgroup(z4, n.subset);
  CHECK(m.subgroup.subset.size() == 4);  // 1 generates all of Z/4
  Quotient qn = quotient(z4, wn);
  Quotient qm = quotient(z4, m);
  auto iso = find_isomorphism(qn.group, qm.group);
  CHECK(iso.has_value());
}

TEST_CASE("group quotients match the coset oracle up to isomorphism") {
  for (const PGroup& g : {cyclic_group(8), klein_group(), symmetric3(), dihedral4()}) {
    for (const auto& h : oracle::subgroups_of(g)) {
      if (!oracle::is_normal_subgroup(g, h)) continue;
      auto w = classify_subset(g, h);
      REQUIRE(w.partial_normal);
      Quotient q = quotient(g, w);
      PGroup expect = oracle::group_quotient(g, h);
      CHECK(find_isomorphism(q.group, expect).has_value());
    }
  }
}

TEST_CASE("kernel of the projection contains the killed subgroup") {
  PGroup s3 = symmetric3();
  for (const auto& h : oracle::subgroups_of(s3)) {
    if (!oracle::is_normal_subgroup(s3, h)) continue;
    auto w = classify_subset(s3, h);
    Quotient q = quotient(s3, w);
    ImpartialSubgroup ker = kernel(q.projection);
    for (ElementId x : h)
      CHECK(std::binary_search(ker.subset.begin(), ker.subset.end(), x));
    // for groups and normal subgroups equality holds
    CHECK(ker.subset == w.subgroup.subset);
  }
}

TEST_CASE("classify rejects candidate domains escaping D ∩ W(subset)") {
  // parent: the Z/4 carrier with an empty word table, whose domain is just
  // the forced closure; (1,1) is not forced (1 is not self-inverse), so a
  // candidate domain claiming it is not contained in D ∩ W(subset)
  PGroup z4 = cyclic_group(4);
  PGroup bare = make_partial_group(z4->names(), 0, z4->inv_table(), table_domain({}));
  REQUIRE_FALSE(bare->in_domain({1, 1}));
  REQUIRE(bare->in_domain({1, 3}));  // the padding of (3)
  CHECK_THROWS_AS(classify_subset(bare, {0, 1, 2, 3}, table_domain({{{1, 1}, 2}})),
                  std::invalid_argument);
}

TEST_CASE("quotient requires an impartial witness") {
  PGroup z6 = cyclic_group(6);
  SubgroupWitness w = classify_subset(z6, {0, 1});  // not closed
  REQUIRE_FALSE(w.impartial);
  CHECK_THROWS_AS(quotient(z6, w), std::invalid_argument);
}

TEST_CASE("inner_relations enumerates unit-product words") {
  PGroup one = trivial_group();
  CHECK(inner_relations(one, 3).size() == 4);  // all unit words

  PGroup z2 = cyclic_group(2);
  auto rels = inner_relations(z2, 3);
  std::set<Word> rs(rels.begin(), rels.end());
  std::set<Word> expect = {{},        {0},       {1, 1},    {0, 0},   {0, 1, 1},
                           {1, 0, 1}, {1, 1, 0}, {0, 0, 0}};
  CHECK(rs == expect);

  PGroup k = klein_group();
  std::set<Word> len2;
  for (const Word& w : inner_relations(k, 2))
    if (w.size() == 2) len2.insert(w);
  std::set<Word> expect2 = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK(len2 == expect2);
}

TEST_CASE("presentation pipeline verdicts") {
  auto triv = present_as_quotient_of_free(trivial_group());
  CHECK(triv.verdict == PresentationVerdict::Verified);
  REQUIRE(triv.isomorphism.has_value());
  CHECK(check_morphism(*triv.isomorphism, 4).ok());

  auto z3 = present_as_quotient_of_free(cyclic_group(3));
  CHECK(z3.verdict == PresentationVerdict::BoundedVerified);
  CHECK(z3.free_object.truncated);
}

TEST_CASE("add_relations with no new words reproduces the group") {
  PGroup z2 = cyclic_group(2);
  auto rep = add_relations(z2, {});
  CHECK_FALSE(rep.truncated);
  CHECK(rep.embedding_verified);
  CHECK(find_isomorphism(rep.quotient_group, z2).has_value());
}

TEST_CASE("add_relations joins a coproduct's summands") {
  auto cp = coproduct({cyclic_group(2), cyclic_group(2)});
  ElementId g1 = cp.injections[0].apply(1), g2 = cp.injections[1].apply(1);
  REQUIRE_FALSE(cp.group->in_domain({g1, g2}));
  auto rep = add_relations(cp.group, {{g1, g2}}, {6, 256});
  // the added word's class lands in the quotient domain
  REQUIRE(rep.embedding.has_value());
  Word img = rep.embedding->apply_word({g1, g2});
  CHECK(rep.quotient_group->in_domain(img));
}
