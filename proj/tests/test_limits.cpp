#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "pg/free.hpp"
#include "pg/groups.hpp"
#include "pg/limits.hpp"

using namespace pg;

TEST_CASE("product of two copies of Z/2 is the Klein group") {
  auto pr = direct_product({cyclic_group(2), cyclic_group(2)});
  CHECK(pr.group->size() == 4);
  CHECK(find_isomorphism(pr.group, klein_group()).has_value());
  for (const auto& p : pr.projections) CHECK(check_morphism(p, 4).ok());
  CHECK(validate_axioms(*pr.group, ValidationMode::Exhaustive).ok());
}

TEST_CASE("product with one factor is the factor") {
  PGroup s3 = symmetric3();
  auto pr = direct_product({s3});
  CHECK(pr.group->size() == 6);
  CHECK(find_isomorphism(pr.group, s3).has_value());
  // identity projection
  for (ElementId x = 0; x < 6; ++x) CHECK(pr.projections[0].apply(x) == x);
}

TEST_CASE("empty product is the trivial group") {
  CHECK(direct_product({}).group->size() == 1);
}

TEST_CASE("product carrier size multiplies") {
  auto pr = direct_product({cyclic_group(3), klein_group()});
  CHECK(pr.group->size() == 12);
}

TEST_CASE("product domain is componentwise") {
  // free pointed on {1,a} times Z/2: ((a,g),(a^,g)) is in D, ((a,g),(a,g))
  // is not -- checked against a table snapshot of the oracle factor
  PGroup f = free_pointed({{"1", "a"}, 0}).group;
  std::vector<std::pair<Word, ElementId>> entries;
  for (const Word& w : domain_words(*f, 4))
    if (w.size() >= 2) entries.emplace_back(w, f->product(w));
  PGroup ft = make_partial_group(f->names(), 0, f->inv_table(), table_domain(entries));
  PGroup z2 = cyclic_group(2);
  auto pr = direct_product({ft, z2});
  ElementId a = *ft->find("a"), ah = *ft->find("a^");
  auto pid = [&](ElementId u, ElementId v) { return static_cast<ElementId>(u * 2 + v); };
  CHECK(pr.group->in_domain({pid(a, 1), pid(ah, 1)}));
  CHECK_FALSE(pr.group->in_domain({pid(a, 1), pid(a, 1)}));
  CHECK(pr.group->product({pid(a, 1), pid(ah, 1)}) == pid(0, 0));
}

TEST_CASE("equalizer basics") {
  PGroup z3 = cyclic_group(3);
  Morphism id = identity_morphism(z3);
  Equalizer whole = equalizer(id, id);
  CHECK(whole.subgroup.subset.size() == 3);
  Equalizer unit = equalizer(id, trivial_map(z3, z3));
  CHECK(unit.subgroup.subset == std::vector<ElementId>{0});
}

TEST_CASE("equalizer of the counterexample maps is the unit") {
  auto fp = free_pointed({{"1", "a", "b"}, 0});
  PGroup k = klein_group();
  Morphism f = universal_map_pointed(fp, k, {0, *k->find("x"), *k->find("y")});
  Morphism g = universal_map_pointed(fp, k, {0, *k->find("xy"), *k->find("x")});
  Equalizer eq = equalizer(f, g);
  CHECK(eq.subgroup.subset == std::vector<ElementId>{fp.group->unit()});
  Morphism incl = eq.subgroup.inclusion();
  for (ElementId x = 0; x < static_cast<ElementId>(eq.subgroup.sub->size()); ++x)
    CHECK(f.apply(incl.apply(x)) == g.apply(incl.apply(x)));
}

TEST_CASE("finite limit of a discrete diagram is the product") {
  Diagram d;
  d.objects = {cyclic_group(2), cyclic_group(3)};
  Limit lim = finite_limit(d);
  CHECK(lim.group->size() == 6);
  CHECK(find_isomorphism(lim.group, cyclic_group(6)).has_value());
}

TEST_CASE("finite limit of a parallel pair embeds the equalizer") {
  PGroup z6 = cyclic_group(6), z3 = cyclic_group(3);
  Morphism mod3{z6, z3, {0, 1, 2, 0, 1, 2}};
  Morphism dbl{z6, z3, {0, 2, 1, 0, 2, 1}};
  Diagram d;
  d.objects = {z6, z3};
  d.arrows.push_back({0, 1, mod3});
  d.arrows.push_back({0, 1, dbl});
  Limit lim = finite_limit(d);
  Equalizer eq = equalizer(mod3, dbl);  // {0, 3}
  CHECK(eq.subgroup.subset == std::vector<ElementId>{0, 3});
  auto iso = find_isomorphism(lim.group, eq.subgroup.sub);
  CHECK(iso.has_value());
}

TEST_CASE("pullback of Z/6 -> Z/3 <- Z/3 has six elements") {
  PGroup z6 = cyclic_group(6), z3 = cyclic_group(3);
  Diagram d;
  d.objects = {z6, z3, z3};
  d.arrows.push_back({0, 1, Morphism{z6, z3, {0, 1, 2, 0, 1, 2}}});
  d.arrows.push_back({2, 1, identity_morphism(z3)});
  Limit lim = finite_limit(d);
  CHECK(lim.group->size() == 6);  // fiber product count: 6*3/3
  CHECK(validate_axioms(*lim.group, ValidationMode::Exhaustive).ok());
  for (const auto& a : d.arrows)
    for (ElementId m = 0; m < static_cast<ElementId>(lim.group->size()); ++m)
      CHECK(a.morphism.apply(lim.cone[a.source].apply(m)) == lim.cone[a.target].apply(m));
}

TEST_CASE("mediating cone maps") {
  PGroup z6 = cyclic_group(6), z3 = cyclic_group(3);
  Diagram d;
  d.objects = {z6, z3, z3};
  d.arrows.push_back({0, 1, Morphism{z6, z3, {0, 1, 2, 0, 1, 2}}});
  d.arrows.push_back({2, 1, identity_morphism(z3)});
  Limit lim = finite_limit(d);

  // apex = the limit itself with its own legs: identity
  Morphism self = mediating_cone_map(lim, d, lim.cone);
  for (ElementId m = 0; m < static_cast<ElementId>(lim.group->size()); ++m)
    CHECK(self.apply(m) == m);

  // apex = trivial group: the trivial map
  PGroup one = trivial_group();
  std::vector<Morphism> legs{trivial_map(one, z6), trivial_map(one, z3), trivial_map(one, z3)};
  Morphism tr = mediating_cone_map(lim, d, legs);
  CHECK(tr.map == std::vector<ElementId>{lim.group->unit()});

  // apex = Z/6 with the diagonal-style data
  std::vector<Morphism> diag{identity_morphism(z6), Morphism{z6, z3, {0, 1, 2, 0, 1, 2}},
                             Morphism{z6, z3, {0, 1, 2, 0, 1, 2}}};
  Morphism t = mediating_cone_map(lim, d, diag);
  CHECK(check_morphism(t, 4).ok());
  for (std::size_t i = 0; i < d.objects.size(); ++i)
    for (ElementId x = 0; x < 6; ++x)
      CHECK(lim.cone[i].apply(t.apply(x)) == diag[i].apply(x));

  // non-commuting legs are rejected
  std::vector<Morphism> bad{identity_morphism(z6), Morphism{z6, z3, {0, 1, 2, 0, 1, 2}},
                            Morphism{z6, z3, {0, 2, 1, 0, 2, 1}}};
  CHECK_THROWS_AS(mediating_cone_map(lim, d, bad), std::invalid_argument);
}

TEST_CASE("product universal property by enumeration on tiny factors") {
  PGroup a = cyclic_group(2), b = cyclic_group(3);
  auto pr = direct_product({a, b});
  for (const PGroup& m : {trivial_group(), cyclic_group(2), cyclic_group(3)}) {
    for (const auto& fa_map : oracle::all_maps(m->size(), a->size())) {
      Morphism fa{m, a, fa_map};
      if (!check_morphism(fa, 4).ok()) continue;
      for (const auto& fb_map : oracle::all_maps(m->size(), b->size())) {
        Morphism fb{m, b, fb_map};
        if (!check_morphism(fb, 4).ok()) continue;
        // exactly one mediating morphism
        std::size_t count = 0;
        for (const auto& t_map : oracle::all_maps(m->size(), pr.group->size())) {
          Morphism t{m, pr.group, t_map};
          bool commutes = true;
          for (ElementId x = 0; x < static_cast<ElementId>(m->size()) && commutes; ++x)
            commutes = pr.projections[0].apply(t.apply(x)) == fa.apply(x) &&
                       pr.projections[1].apply(t.apply(x)) == fb.apply(x);
          if (commutes && check_morphism(t, 4).ok()) ++count;
        }
        CHECK(count == 1);
      }
    }
  }
}

TEST_CASE("equalizer universal property by enumeration") {
  PGroup z6 = cyclic_group(6), z3 = cyclic_group(3);
  Morphism f{z6, z3, {0, 1, 2, 0, 1, 2}};
  Morphism g{z6, z3, {0, 2, 1, 0, 2, 1}};
  Equalizer eq = equalizer(f, g);
  Morphism incl = eq.subgroup.inclusion();
  for (const PGroup& m : {trivial_group(), cyclic_group(2), cyclic_group(4)}) {
    for (const auto& h_map : oracle::all_maps(m->size(), z6->size())) {
      Morphism h{m, z6, h_map};
      if (!check_morphism(h, 4).ok()) continue;
      bool equalizes = true;
      for (ElementId x = 0; x < static_cast<ElementId>(m->size()); ++x)
        equalizes = equalizes && f.apply(h.apply(x)) == g.apply(h.apply(x));
      if (!equalizes) continue;
      std::size_t count = 0;
      for (const auto& u_map : oracle::all_maps(m->size(), eq.subgroup.sub->size())) {
        Morphism u{m, eq.subgroup.sub, u_map};
        bool commutes = true;
        for (ElementId x = 0; x < static_cast<ElementId>(m->size()) && commutes; ++x)
          commutes = incl.apply(u.apply(x)) == h.apply(x);
        if (commutes && check_morphism(u, 4).ok()) ++count;
      }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("limits of finite inputs stay finite and valid") {
  Diagram d;
  d.objects = {klein_group(), cyclic_group(2)};
  d.arrows.push_back({0, 1, Morphism{d.objects[0], d.objects[1], {0, 1, 0, 1}}});
  Limit lim = finite_limit(d);
  CHECK(lim.group->size() >= 1);
  CHECK(validate_axioms(*lim.group, ValidationMode::Exhaustive).ok());
}
