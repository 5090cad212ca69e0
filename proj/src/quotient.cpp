#include "pg/quotient.hpp"

#include <algorithm>
#include <set>

#include "pg/morphism.hpp"

namespace pg {

namespace {

std::size_t sweep_len(const PartialGroup& g, std::size_t cap = 6) {
  std::size_t h = g.domain().natural_horizon(g);
  std::size_t len = h == SIZE_MAX ? cap : std::min(h, cap);
  std::size_t total = 1, lim = 0;
  while (lim < len && total <= 500000 / std::max<std::size_t>(g.size(), 1)) {
    total *= std::max<std::size_t>(g.size(), 1);
    ++lim;
  }
  return std::max<std::size_t>(lim, 2);
}

}  // namespace

SubgroupWitness classify_subset(const PGroup& g, const std::vector<ElementId>& subset_in,
                                DomainPtr candidate_domain) {
  if (g->domain().is_oracle())
    throw std::invalid_argument("classify_subset: oracle-domain parent unsupported");
  std::vector<ElementId> subset = subset_in;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (ElementId x : subset)
    if (!g->valid_id(x)) throw std::invalid_argument("classify_subset: id out of range");

  SubgroupWitness w;
  std::vector<bool> in_subset(g->size(), false);
  for (ElementId x : subset) in_subset[static_cast<std::size_t>(x)] = true;
  bool closed = !subset.empty() && in_subset[static_cast<std::size_t>(g->unit())];
  for (ElementId x : subset) closed = closed && in_subset[static_cast<std::size_t>(g->inv(x))];
  if (!closed) {
    // not even a candidate carrier; report all flags false with the bare data
    std::vector<ElementId> keep = subset;
    if (std::find(keep.begin(), keep.end(), g->unit()) == keep.end()) keep.push_back(g->unit());
    for (ElementId x : subset) keep.push_back(g->inv(x));
    w.subgroup = make_subgroup(g, keep, table_domain({}));
    return w;
  }

  DomainPtr dom = candidate_domain ? candidate_domain : restriction_domain(g, subset);
  w.subgroup = make_subgroup(g, subset, dom);
  const PGroup& sub = w.subgroup.sub;

  std::size_t len = sweep_len(*sub);
  // impartial: E ⊆ D ∩ W(H), products land in H, and (H, E) is a partial group
  bool impartial = true;
  for (const Word& lw : domain_words(*sub, len)) {
    Word pw(lw.size());
    for (std::size_t i = 0; i < lw.size(); ++i)
      pw[i] = w.subgroup.to_parent[static_cast<std::size_t>(lw[i])];
    auto pp = g->try_product(pw);
    if (candidate_domain && !pp)
      throw std::invalid_argument("classify_subset: candidate domain not contained in D ∩ W(subset)");
    if (!pp || !in_subset[static_cast<std::size_t>(*pp)] ||
        w.subgroup.to_parent[static_cast<std::size_t>(sub->product(lw))] != *pp) {
      impartial = false;
      break;
    }
  }
  impartial = impartial && validate_axioms(*sub, ValidationMode::Exhaustive).ok();
  w.impartial = impartial;
  if (!impartial) return w;

  // partial: E equals all of D ∩ W(H)
  bool partial = true;
  {
    Word buf;
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
      if (!partial) return;
      if (!buf.empty()) {
        Word pw(buf.size());
        for (std::size_t i = 0; i < buf.size(); ++i)
          pw[i] = w.subgroup.to_parent[static_cast<std::size_t>(buf[i])];
        auto pp = g->try_product(pw);
        if (pp && in_subset[static_cast<std::size_t>(*pp)] && !sub->in_domain(buf))
          partial = false;
        // a parent-domain word over H with product outside H also separates E
        // from D ∩ W(H); it cannot be in any sub-domain, so impartiality is
        // unaffected but partiality fails
        if (pp && !in_subset[static_cast<std::size_t>(*pp)]) partial = false;
      }
      if (remaining == 0) return;
      for (ElementId x = 0; x < static_cast<ElementId>(sub->size()); ++x) {
        buf.push_back(x);
        self(self, remaining - 1);
        buf.pop_back();
      }
    };
    rec(rec, len);
  }
  w.partial = partial;
  if (!partial) return w;

  // partial normal: closed under every defined conjugation
  bool normal = true;
  for (ElementId gg = 0; gg < static_cast<ElementId>(g->size()) && normal; ++gg)
    for (ElementId x : subset) {
      Word conj{g->inv(gg), x, gg};
      auto p = g->try_product(conj);
      if (p && !in_subset[static_cast<std::size_t>(*p)]) {
        normal = false;
        break;
      }
    }
  w.partial_normal = normal;
  return w;
}

SubgroupWitness generated_partial_subgroup(const PGroup& g,
                                           const std::vector<ElementId>& generators) {
  if (g->domain().is_oracle())
    throw std::invalid_argument("generated_partial_subgroup: oracle-domain parent unsupported");
  std::set<ElementId> current{g->unit()};
  for (ElementId x : generators) {
    if (!g->valid_id(x)) throw std::invalid_argument("generated_partial_subgroup: id out of range");
    current.insert(x);
    current.insert(g->inv(x));
  }
  // Binary products suffice: the product of a longer domain word folds
  // through its length-2 prefixes, which stay inside the growing set.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementId> snapshot(current.begin(), current.end());
    for (ElementId a : snapshot)
      for (ElementId b : snapshot)
        if (auto p = g->try_product({a, b}))
          if (current.insert(*p).second) {
            current.insert(g->inv(*p));
            grew = true;
          }
  }
  std::vector<ElementId> subset(current.begin(), current.end());
  SubgroupWitness w;
  w.subgroup = make_subgroup(g, subset, restriction_domain(g, subset));
  w.impartial = w.partial = true;
  w.partial_normal = true;
  for (ElementId gg = 0; gg < static_cast<ElementId>(g->size()) && w.partial_normal; ++gg)
    for (ElementId x : subset) {
      auto p = g->try_product({g->inv(gg), x, gg});
      if (p && !current.count(*p)) {
        w.partial_normal = false;
        break;
      }
    }
  return w;
}

SubgroupWitness intersect_impartial(const std::vector<SubgroupWitness>& subs) {
  if (subs.empty()) throw std::invalid_argument("intersect_impartial: empty list");
  const PGroup parent = subs[0].subgroup.parent;
  for (const auto& s : subs) {
    if (!s.impartial) throw std::invalid_argument("intersect_impartial: operand not impartial");
    if (s.subgroup.parent != parent &&
        (s.subgroup.parent->size() != parent->size() ||
         s.subgroup.parent->names() != parent->names()))
      throw std::invalid_argument("intersect_impartial: distinct parents");
  }
  std::vector<ElementId> subset;
  for (ElementId x = 0; x < static_cast<ElementId>(parent->size()); ++x) {
    bool in_all = true;
    for (const auto& s : subs)
      in_all = in_all && std::binary_search(s.subgroup.subset.begin(), s.subgroup.subset.end(), x);
    if (in_all) subset.push_back(x);
  }
  std::vector<PGroup> parts;
  std::vector<std::vector<ElementId>> to_part;
  for (const auto& s : subs) {
    std::vector<ElementId> parent_to_local(parent->size(), -1);
    for (std::size_t i = 0; i < s.subgroup.to_parent.size(); ++i)
      parent_to_local[static_cast<std::size_t>(s.subgroup.to_parent[i])] =
          static_cast<ElementId>(i);
    std::vector<ElementId> m(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
      m[i] = parent_to_local[static_cast<std::size_t>(subset[i])];
    parts.push_back(s.subgroup.sub);
    to_part.push_back(std::move(m));
  }
  SubgroupWitness w;
  w.subgroup = make_subgroup(parent, subset, intersection_domain(parts, to_part));
  w.impartial = true;
  SubgroupWitness check = classify_subset(parent, subset, w.subgroup.sub->domain_ptr());
  w.partial = check.partial;
  w.partial_normal = check.partial_normal;
  return w;
}

Quotient quotient(const PGroup& g, const SubgroupWitness& h) {
  if (!h.impartial) throw std::invalid_argument("quotient: subgroup witness not impartial");
  std::vector<std::pair<ElementId, ElementId>> seed;
  for (ElementId x : h.subgroup.subset) seed.emplace_back(x, g->unit());
  Congruence cong = congruence_closure(g, seed);
  return quotient_by_congruence(g, cong);
}

std::vector<Word> inner_relations(const PGroup& g, std::size_t max_len) {
  std::vector<Word> out;
  for (const Word& w : domain_words(*g, max_len))
    if (g->product(w) == g->unit()) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------
// Generators and relations.

namespace {

// Largest seed length keeping the enumeration within ~500k words.
std::size_t seed_len(const PGroup& g, std::size_t max_word_len) {
  std::size_t len = 0, total = 1;
  while (len < max_word_len && total <= 500000 / std::max<std::size_t>(g->size(), 1)) {
    total *= std::max<std::size_t>(g->size(), 1);
    ++len;
  }
  return len;
}

SetSObject sets_object_of(const PGroup& g, std::size_t max_word_len,
                          const std::vector<Word>& extra) {
  SetSObject x;
  x.elements = g->names();
  x.involution = g->inv_table();
  for (const Word& w : domain_words(*g, seed_len(g, max_word_len)))
    if (w.size() >= 2) x.marked_words.push_back(w);
  for (const Word& w : extra)
    if (w.size() >= 2) x.marked_words.push_back(w);
  std::sort(x.marked_words.begin(), x.marked_words.end());
  x.marked_words.erase(std::unique(x.marked_words.begin(), x.marked_words.end()),
                       x.marked_words.end());
  return x;
}

// Maps a relation word of g to the carrier element of the free object it
// multiplies to.
std::optional<ElementId> relation_image(const FreePartialGroup& m, const Word& u) {
  GxElement prod = m.gx->embed_word(u);
  for (std::size_t c = 0; c < m.carrier_gx.size(); ++c)
    if (m.carrier_gx[c] == prod) return static_cast<ElementId>(c);
  return std::nullopt;
}

}  // namespace

PresentationReport present_as_quotient_of_free(const PGroup& g, const SaturationBounds& bounds) {
  if (g->domain().is_oracle())
    throw std::invalid_argument("present_as_quotient_of_free: oracle-domain input unsupported");
  PresentationReport rep;
  SetSObject x = sets_object_of(g, bounds.max_word_len, {});
  rep.free_object = free_sets(x, bounds);
  const FreePartialGroup& m = rep.free_object;

  std::vector<ElementId> rgens;
  for (const Word& u : inner_relations(g, seed_len(g, bounds.max_word_len))) {
    auto img = relation_image(m, u);
    if (img)
      rgens.push_back(*img);
    else if (rep.note.find("beyond the element bound") == std::string::npos)
      rep.note += "some relation images fell beyond the element bound; ";
  }
  std::sort(rgens.begin(), rgens.end());
  rgens.erase(std::unique(rgens.begin(), rgens.end()), rgens.end());
  rep.relation_generators = rgens;

  SubgroupWitness n = generated_partial_subgroup(m.group, rgens);
  Quotient q = quotient(m.group, n);
  rep.quotient_group = q.group;

  if (!m.truncated) {
    auto iso = find_isomorphism(q.group, g);
    if (iso) {
      rep.verdict = PresentationVerdict::Verified;
      rep.isomorphism = iso;
      return rep;
    }
    rep.verdict = PresentationVerdict::Inconclusive;
    rep.note += "complete free object but no isomorphism found; ";
    return rep;
  }

  // Bounded verification: the counit (evaluate any witness in g) must be
  // surjective with fibers inside the congruence that defines the quotient.
  std::vector<std::optional<ElementId>> counit(m.group->size());
  for (std::size_t c = 0; c < m.group->size(); ++c)
    for (const Word& wit : m.witnesses[c])
      if (auto p = g->try_product(wit)) {
        counit[c] = *p;
        break;
      }
  std::vector<bool> hit(g->size(), false);
  for (const auto& v : counit)
    if (v) hit[static_cast<std::size_t>(*v)] = true;
  bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  bool fibers_ok = true;
  for (std::size_t a = 0; a < counit.size() && fibers_ok; ++a)
    for (std::size_t b = a + 1; b < counit.size() && fibers_ok; ++b)
      if (counit[a] && counit[b] && *counit[a] == *counit[b])
        fibers_ok = q.projection.apply(static_cast<ElementId>(a)) ==
                    q.projection.apply(static_cast<ElementId>(b));
  if (surjective && fibers_ok) {
    rep.verdict = PresentationVerdict::BoundedVerified;
  } else {
    rep.verdict = PresentationVerdict::Inconclusive;
    rep.note += surjective ? "counit fibers escape the congruence; " : "counit not surjective; ";
  }
  return rep;
}

AddRelationsReport add_relations(const PGroup& g, const std::vector<Word>& s,
                                 const SaturationBounds& bounds) {
  if (g->domain().is_oracle())
    throw std::invalid_argument("add_relations: oracle-domain input unsupported");
  for (const Word& w : s)
    for (ElementId e : w)
      if (!g->valid_id(e)) throw std::invalid_argument("add_relations: relation id out of range");

  AddRelationsReport rep;
  SetSObject x = sets_object_of(g, bounds.max_word_len, s);
  rep.free_object = free_sets(x, bounds);
  const FreePartialGroup& m = rep.free_object;
  rep.truncated = m.truncated;

  std::vector<ElementId> rgens;
  for (const Word& u : inner_relations(g, seed_len(g, bounds.max_word_len)))
    if (auto img = relation_image(m, u)) rgens.push_back(*img);
  SubgroupWitness n = generated_partial_subgroup(m.group, rgens);
  Quotient q = quotient(m.group, n);
  rep.quotient_group = q.group;

  // composite g -> M+ -> M+/N+ on generators
  std::vector<ElementId> comp(g->size());
  for (ElementId e = 0; e < static_cast<ElementId>(g->size()); ++e)
    comp[static_cast<std::size_t>(e)] =
        q.projection.apply(m.generator_embedding[static_cast<std::size_t>(e)]);
  Morphism embedding{g, q.group, comp};

  bool injective = true;
  {
    std::vector<bool> seen(q.group->size(), false);
    for (ElementId v : comp) {
      if (seen[static_cast<std::size_t>(v)]) injective = false;
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  bool words_present = true;
  for (const Word& w : s)
    if (!q.group->in_domain(embedding.apply_word(w))) words_present = false;
  bool is_morphism = check_morphism(embedding, bounds.max_word_len).ok();

  if (!m.truncated && injective && words_present && is_morphism) {
    rep.embedding_verified = true;
    rep.embedding = embedding;
  } else {
    if (!injective) rep.note += "composite not injective; ";
    if (!words_present) rep.note += "added words missing from the quotient domain; ";
    if (!is_morphism) rep.note += "composite not a morphism; ";
    if (m.truncated) rep.note += "free object truncated; ";
    if (injective && words_present && is_morphism) rep.embedding = embedding;
  }
  return rep;
}

}  // namespace pg
