#pragma once

#include "pg/colimits.hpp"
#include "pg/morphism.hpp"

// Products, equalizers and general finite limits.

namespace pg {

struct Product {
  PGroup group;
  std::vector<Morphism> projections;
};

// Setwise cartesian product with componentwise domain, product and
// inversion. The empty product is the trivial group (terminal object).
Product direct_product(const std::vector<PGroup>& factors);

struct Equalizer {
  ImpartialSubgroup subgroup;  // {x | xf = xg} with domain D ∩ W(subset)
};

Equalizer equalizer(const Morphism& f, const Morphism& g);

struct Limit {
  PGroup group;
  std::vector<Morphism> cone;
};

// Equalizer of the two canonical maps  ∏(objects) ⇉ ∏(arrow targets).
Limit finite_limit(const Diagram& d);

// The unique morphism into the limit determined componentwise by candidate
// legs; throws if the legs do not commute with the diagram arrows.
Morphism mediating_cone_map(const Limit& lim, const Diagram& d,
                            const std::vector<Morphism>& candidate_legs);

}  // namespace pg
