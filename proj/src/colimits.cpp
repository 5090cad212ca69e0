#include "pg/colimits.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace pg {

namespace {

bool same_carrier(const PGroup& a, const PGroup& b) {
  return a == b || (a->size() == b->size() && a->names() == b->names());
}

}  // namespace

// ---------------------------------------------------------------------------
// Congruence: union-find with smallest-id representatives and a merge log.

Congruence::Congruence(std::size_t n) : parent_(n) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<ElementId>(i);
}

ElementId Congruence::find(ElementId x) const {
  ElementId root = x;
  while (parent_[static_cast<std::size_t>(root)] != root)
    root = parent_[static_cast<std::size_t>(root)];
  while (parent_[static_cast<std::size_t>(x)] != x) {
    ElementId next = parent_[static_cast<std::size_t>(x)];
    parent_[static_cast<std::size_t>(x)] = root;
    x = next;
  }
  return root;
}

bool Congruence::merge(ElementId a, ElementId b) {
  ElementId ra = find(a), rb = find(b);
  if (ra == rb) return false;
  if (ra > rb) std::swap(ra, rb);
  parent_[static_cast<std::size_t>(rb)] = ra;  // smallest id stays the representative
  return true;
}

std::size_t Congruence::class_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (find(static_cast<ElementId>(i)) == static_cast<ElementId>(i)) ++c;
  return c;
}

std::vector<std::vector<ElementId>> Congruence::classes() const {
  std::map<ElementId, std::vector<ElementId>> by_rep;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    by_rep[find(static_cast<ElementId>(i))].push_back(static_cast<ElementId>(i));
  std::vector<std::vector<ElementId>> out;
  for (auto& [rep, cls] : by_rep) out.push_back(std::move(cls));
  return out;
}

// ---------------------------------------------------------------------------
// Coproducts.

Coproduct coproduct(const std::vector<PGroup>& summands) {
  if (summands.empty()) {
    // initial object: the trivial group
    PGroup triv = make_partial_group({"1"}, 0, {0}, full_domain({0}, 1));
    return Coproduct{triv, {}};
  }
  for (const auto& s : summands)
    if (s->domain().is_oracle())
      throw std::invalid_argument("coproduct: oracle-domain summands unsupported");

  std::vector<std::string> names{summands[0]->name(summands[0]->unit())};
  std::vector<ElementId> inv{0};
  std::vector<std::vector<ElementId>> embed;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const PartialGroup& s = *summands[k];
    std::vector<ElementId> e(s.size());
    e[static_cast<std::size_t>(s.unit())] = 0;
    for (ElementId z = 0; z < static_cast<ElementId>(s.size()); ++z) {
      if (z == s.unit()) continue;
      e[static_cast<std::size_t>(z)] = static_cast<ElementId>(names.size());
      std::string n = s.name(z);
      if (summands.size() > 1) n = std::to_string(k) + "." + n;
      names.push_back(std::move(n));
      inv.push_back(0);  // fixed below
    }
    embed.push_back(std::move(e));
  }
  for (std::size_t k = 0; k < summands.size(); ++k)
    for (ElementId z = 0; z < static_cast<ElementId>(summands[k]->size()); ++z)
      inv[static_cast<std::size_t>(embed[k][static_cast<std::size_t>(z)])] =
          embed[k][static_cast<std::size_t>(summands[k]->inv(z))];

  PGroup g = make_partial_group(std::move(names), 0, std::move(inv),
                                union_domain(summands, embed));
  Coproduct out{g, {}};
  for (std::size_t k = 0; k < summands.size(); ++k)
    out.injections.push_back(Morphism{summands[k], g, embed[k]});
  return out;
}

// ---------------------------------------------------------------------------
// Condition-(*) closure.
//
// Only length-2 domain words are bucketed: a related pair of longer words
// contracts to a related pair of shorter ones through axiom 3 (their leading
// pairs are domain words by axiom 1), so length-2 instances force every merge
// that any equal-length instance forces.

Congruence congruence_closure(const PGroup& g,
                              const std::vector<std::pair<ElementId, ElementId>>& seed) {
  Congruence cong(g->size());
  for (auto [a, b] : seed) {
    if (!g->valid_id(a) || !g->valid_id(b))
      throw std::invalid_argument("congruence_closure: seed id out of range");
    if (cong.merge(a, b)) cong.record({a, b, true, {}, {}});
    // the quotient inverts classwise, so the seed is closed under inversion
    if (cong.merge(g->inv(a), g->inv(b)))
      cong.record({g->inv(a), g->inv(b), true, {}, {}});
  }

  struct PairEntry {
    ElementId a, b, prod;
  };
  std::vector<PairEntry> pairs;
  for (ElementId a = 0; a < static_cast<ElementId>(g->size()); ++a)
    for (ElementId b = 0; b < static_cast<ElementId>(g->size()); ++b)
      if (auto p = g->try_product({a, b})) pairs.push_back({a, b, *p});

  // Merging products also merges their inverses: the inverted words are the
  // componentwise-related instance the quotient's inversion map needs.
  auto merge_with_inverses = [&](const PairEntry& lead, const PairEntry& other) {
    bool any = false;
    if (cong.merge(lead.prod, other.prod)) {
      cong.record({lead.prod, other.prod, false, Word{lead.a, lead.b}, Word{other.a, other.b}});
      any = true;
    }
    ElementId il = g->inv(lead.prod), io = g->inv(other.prod);
    if (cong.merge(il, io)) {
      cong.record({il, io, false, Word{g->inv(lead.b), g->inv(lead.a)},
                   Word{g->inv(other.b), g->inv(other.a)}});
      any = true;
    }
    return any;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::unordered_map<std::uint64_t, std::size_t> bucket_leader;
    bucket_leader.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto key = static_cast<std::uint64_t>(cong.find(pairs[i].a)) << 32 |
                 static_cast<std::uint32_t>(cong.find(pairs[i].b));
      auto [it, fresh] = bucket_leader.emplace(key, i);
      if (fresh) continue;
      if (merge_with_inverses(pairs[it->second], pairs[i])) changed = true;
    }
  }
  return cong;
}

// ---------------------------------------------------------------------------
// Quotients.

namespace {

// All length-2 words in one (class, class) bucket must have related products;
// longer instances reduce to these by contraction.
bool star_closed(const PartialGroup& g, const Congruence& r) {
  std::unordered_map<std::uint64_t, ElementId> bucket_rep;
  for (ElementId a = 0; a < static_cast<ElementId>(g.size()); ++a)
    for (ElementId b = 0; b < static_cast<ElementId>(g.size()); ++b) {
      auto p = g.try_product({a, b});
      if (!p) continue;
      auto key = static_cast<std::uint64_t>(r.find(a)) << 32 | static_cast<std::uint32_t>(r.find(b));
      auto [it, fresh] = bucket_rep.emplace(key, r.find(*p));
      if (!fresh && it->second != r.find(*p)) return false;
    }
  return true;
}

}  // namespace

Quotient quotient_by_congruence(const PGroup& g, const Congruence& r) {
  if (r.size() != g->size())
    throw std::invalid_argument("quotient_by_congruence: congruence over a different carrier");
  if (!star_closed(*g, r))
    throw std::invalid_argument("quotient_by_congruence: congruence violates condition (*)");
  for (ElementId x = 0; x < static_cast<ElementId>(g->size()); ++x)
    if (r.find(g->inv(x)) != r.find(g->inv(r.find(x))))
      throw std::invalid_argument("quotient_by_congruence: congruence not closed under inversion");

  std::vector<ElementId> reps;
  std::vector<ElementId> proj(g->size());
  for (ElementId x = 0; x < static_cast<ElementId>(g->size()); ++x)
    if (r.find(x) == x) {
      proj[static_cast<std::size_t>(x)] = static_cast<ElementId>(reps.size());
      reps.push_back(x);
    }
  for (ElementId x = 0; x < static_cast<ElementId>(g->size()); ++x)
    proj[static_cast<std::size_t>(x)] = proj[static_cast<std::size_t>(r.find(x))];

  std::vector<std::string> names;
  for (ElementId rep : reps) names.push_back("[" + g->name(rep) + "]");
  ElementId unit = proj[static_cast<std::size_t>(g->unit())];
  std::vector<ElementId> inv(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c)
    inv[c] = proj[static_cast<std::size_t>(g->inv(reps[c]))];

  DomainPtr dom;
  if (const auto* mul = full_table(g->domain())) {
    std::vector<ElementId> qmul(reps.size() * reps.size());
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = 0; b < reps.size(); ++b)
        qmul[a * reps.size() + b] =
            proj[static_cast<std::size_t>((*mul)[static_cast<std::size_t>(reps[a]) * g->size() +
                                                 static_cast<std::size_t>(reps[b])])];
    dom = full_domain(std::move(qmul), reps.size());
  } else if (const auto* entries = table_entries(g->domain())) {
    std::vector<std::pair<Word, ElementId>> qentries;
    for (const auto& [w, p] : *entries) {
      Word qw(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) qw[i] = proj[static_cast<std::size_t>(w[i])];
      qentries.emplace_back(std::move(qw), proj[static_cast<std::size_t>(p)]);
    }
    dom = table_domain(std::move(qentries));
  } else {
    dom = pushforward_domain(g, proj);
  }

  PGroup q = make_partial_group(std::move(names), unit, std::move(inv), std::move(dom));
  return Quotient{q, Morphism{g, q, std::move(proj)}};
}

Quotient coequalizer(const Morphism& f, const Morphism& g) {
  if (f.source->size() != g.source->size() || !same_carrier(f.target, g.target))
    throw std::invalid_argument("coequalizer: not a parallel pair");
  if (f.target->domain().is_oracle())
    throw std::invalid_argument("coequalizer: oracle-domain target unsupported");
  std::vector<std::pair<ElementId, ElementId>> seed;
  for (ElementId x = 0; x < static_cast<ElementId>(f.source->size()); ++x)
    seed.emplace_back(f.apply(x), g.apply(x));
  Congruence cong = congruence_closure(f.target, seed);
  return quotient_by_congruence(f.target, cong);
}

std::vector<std::vector<ElementId>> set_coequalizer_classes(const Morphism& f, const Morphism& g) {
  if (f.source->size() != g.source->size() || !same_carrier(f.target, g.target))
    throw std::invalid_argument("set_coequalizer: not a parallel pair");
  Congruence cong(f.target->size());
  for (ElementId x = 0; x < static_cast<ElementId>(f.source->size()); ++x)
    cong.merge(f.apply(x), g.apply(x));
  return cong.classes();
}

Morphism mediating_cocone_map(const Quotient& q, const Morphism& tau) {
  if (tau.source->size() != q.projection.source->size())
    throw std::invalid_argument("mediating_cocone_map: tau not defined on the base");
  std::vector<ElementId> map(q.group->size(), -1);
  for (ElementId x = 0; x < static_cast<ElementId>(tau.source->size()); ++x) {
    ElementId cls = q.projection.apply(x);
    ElementId v = tau.apply(x);
    if (map[static_cast<std::size_t>(cls)] >= 0 && map[static_cast<std::size_t>(cls)] != v)
      throw std::invalid_argument("mediating_cocone_map: tau is not constant on classes");
    map[static_cast<std::size_t>(cls)] = v;
  }
  return Morphism{q.group, tau.target, std::move(map)};
}

// ---------------------------------------------------------------------------
// Finite colimits via  coeq( ⊔ sources ⇉ ⊔ objects ).

Colimit finite_colimit(const Diagram& d) {
  for (const auto& a : d.arrows) {
    if (a.source >= d.objects.size() || a.target >= d.objects.size())
      throw std::invalid_argument("finite_colimit: arrow endpoint out of range");
    if (a.morphism.map.size() != d.objects[a.source]->size())
      throw std::invalid_argument("finite_colimit: arrow map size mismatch");
  }
  Coproduct objs = coproduct(d.objects);
  if (d.arrows.empty()) return Colimit{objs.group, objs.injections};

  std::vector<PGroup> sources;
  for (const auto& a : d.arrows) sources.push_back(d.objects[a.source]);
  Coproduct srcs = coproduct(sources);

  std::vector<ElementId> phi(srcs.group->size(), objs.group->unit());
  std::vector<ElementId> psi(srcs.group->size(), objs.group->unit());
  for (std::size_t k = 0; k < d.arrows.size(); ++k) {
    const auto& a = d.arrows[k];
    for (ElementId x = 0; x < static_cast<ElementId>(d.objects[a.source]->size()); ++x) {
      ElementId s = srcs.injections[k].apply(x);
      phi[static_cast<std::size_t>(s)] = objs.injections[a.source].apply(x);
      psi[static_cast<std::size_t>(s)] = objs.injections[a.target].apply(a.morphism.apply(x));
    }
  }
  Quotient q = coequalizer(Morphism{srcs.group, objs.group, phi},
                           Morphism{srcs.group, objs.group, psi});
  Colimit out{q.group, {}};
  for (std::size_t i = 0; i < d.objects.size(); ++i)
    out.cocone.push_back(compose(objs.injections[i], q.projection));
  return out;
}

}  // namespace pg
