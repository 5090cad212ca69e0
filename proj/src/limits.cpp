#include "pg/limits.hpp"

#include <algorithm>

namespace pg {

namespace {

bool same_carrier(const PGroup& a, const PGroup& b) {
  return a == b || (a->size() == b->size() && a->names() == b->names());
}

}  // namespace

Product direct_product(const std::vector<PGroup>& factors) {
  if (factors.empty()) {
    PGroup triv = make_partial_group({"1"}, 0, {0}, full_domain({0}, 1));
    return Product{triv, {}};
  }
  for (const auto& f : factors)
    if (f->domain().is_oracle())
      throw std::invalid_argument("direct_product: oracle-domain factors unsupported");

  std::size_t total = 1;
  for (const auto& f : factors) total *= f->size();
  if (total > 4096) throw std::invalid_argument("direct_product: carrier too large");

  std::vector<std::string> names(total);
  std::vector<ElementId> inv(total);
  std::vector<std::vector<ElementId>> proj(factors.size(), std::vector<ElementId>(total));
  for (std::size_t id = 0; id < total; ++id) {
    std::size_t rest = id;
    std::string name;
    // mixed radix, last factor fastest (matches product_domain)
    std::vector<ElementId> comps(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      comps[k] = static_cast<ElementId>(rest % factors[k]->size());
      rest /= factors[k]->size();
    }
    std::size_t inv_id = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      proj[k][id] = comps[k];
      name += (k ? "," : "(") + factors[k]->name(comps[k]);
      inv_id = inv_id * factors[k]->size() +
               static_cast<std::size_t>(factors[k]->inv(comps[k]));
    }
    names[id] = name + ")";
    inv[id] = static_cast<ElementId>(inv_id);
  }
  std::size_t unit = 0;
  for (std::size_t k = 0; k < factors.size(); ++k)
    unit = unit * factors[k]->size() + static_cast<std::size_t>(factors[k]->unit());

  PGroup g = make_partial_group(std::move(names), static_cast<ElementId>(unit), std::move(inv),
                                product_domain(factors));
  Product out{g, {}};
  for (std::size_t k = 0; k < factors.size(); ++k)
    out.projections.push_back(Morphism{g, factors[k], proj[k]});
  return out;
}

Equalizer equalizer(const Morphism& f, const Morphism& g) {
  if (f.source->size() != g.source->size() || !same_carrier(f.target, g.target))
    throw std::invalid_argument("equalizer: not a parallel pair");
  std::vector<ElementId> subset;
  for (ElementId x = 0; x < static_cast<ElementId>(f.source->size()); ++x)
    if (f.apply(x) == g.apply(x)) subset.push_back(x);
  return Equalizer{make_subgroup(f.source, subset, restriction_domain(f.source, subset))};
}

Limit finite_limit(const Diagram& d) {
  for (const auto& a : d.arrows) {
    if (a.source >= d.objects.size() || a.target >= d.objects.size())
      throw std::invalid_argument("finite_limit: arrow endpoint out of range");
    if (a.morphism.map.size() != d.objects[a.source]->size())
      throw std::invalid_argument("finite_limit: arrow map size mismatch");
  }
  Product prod = direct_product(d.objects);
  if (d.arrows.empty()) return Limit{prod.group, prod.projections};

  std::vector<PGroup> arrow_targets;
  for (const auto& a : d.arrows) arrow_targets.push_back(d.objects[a.target]);
  Product tgt = direct_product(arrow_targets);

  std::vector<ElementId> phi(prod.group->size());
  std::vector<ElementId> psi(prod.group->size());
  for (ElementId m = 0; m < static_cast<ElementId>(prod.group->size()); ++m) {
    std::size_t vphi = 0, vpsi = 0;
    for (std::size_t k = 0; k < d.arrows.size(); ++k) {
      const auto& a = d.arrows[k];
      std::size_t n = d.objects[a.target]->size();
      vphi = vphi * n + static_cast<std::size_t>(prod.projections[a.target].apply(m));
      vpsi = vpsi * n +
             static_cast<std::size_t>(a.morphism.apply(prod.projections[a.source].apply(m)));
    }
    phi[static_cast<std::size_t>(m)] = static_cast<ElementId>(vphi);
    psi[static_cast<std::size_t>(m)] = static_cast<ElementId>(vpsi);
  }
  Equalizer eq = equalizer(Morphism{prod.group, tgt.group, phi},
                           Morphism{prod.group, tgt.group, psi});
  Limit out{eq.subgroup.sub, {}};
  for (std::size_t i = 0; i < d.objects.size(); ++i)
    out.cone.push_back(compose(eq.subgroup.inclusion(), prod.projections[i]));
  return out;
}

Morphism mediating_cone_map(const Limit& lim, const Diagram& d,
                            const std::vector<Morphism>& candidate_legs) {
  if (candidate_legs.size() != d.objects.size())
    throw std::invalid_argument("mediating_cone_map: wrong number of legs");
  if (candidate_legs.empty())
    throw std::invalid_argument("mediating_cone_map: empty diagram needs an explicit apex");
  PGroup apex = candidate_legs[0].source;
  for (const auto& leg : candidate_legs)
    if (leg.source != apex)
      throw std::invalid_argument("mediating_cone_map: legs with different apexes");
  for (const auto& a : d.arrows)
    for (ElementId x = 0; x < static_cast<ElementId>(apex->size()); ++x)
      if (a.morphism.apply(candidate_legs[a.source].apply(x)) != candidate_legs[a.target].apply(x))
        throw std::invalid_argument("mediating_cone_map: legs do not commute with the diagram");

  // componentwise determination through the limit's cone
  std::vector<ElementId> map(apex->size(), -1);
  for (ElementId x = 0; x < static_cast<ElementId>(apex->size()); ++x) {
    for (ElementId m = 0; m < static_cast<ElementId>(lim.group->size()); ++m) {
      bool match = true;
      for (std::size_t i = 0; i < d.objects.size() && match; ++i)
        match = lim.cone[i].apply(m) == candidate_legs[i].apply(x);
      if (match) {
        map[static_cast<std::size_t>(x)] = m;
        break;
      }
    }
    if (map[static_cast<std::size_t>(x)] < 0)
      throw std::invalid_argument("mediating_cone_map: no limit element matches a candidate tuple");
  }
  return Morphism{apex, lim.group, std::move(map)};
}

}  // namespace pg
