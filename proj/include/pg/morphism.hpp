#pragma once

#include <optional>

#include "pg/core.hpp"

// Morphisms of partial groups: carrier maps whose componentwise extension
// sends the source domain into the target domain and commutes with the
// products.

namespace pg {

struct Morphism {
  PGroup source;
  PGroup target;
  std::vector<ElementId> map;  // total on the source carrier

  ElementId apply(ElementId x) const { return map.at(static_cast<std::size_t>(x)); }
  Word apply_word(const Word& w) const;
};

// A subset of a parent carrier packaged as a partial group of its own,
// together with the inclusion. The sub-domain may be anything between the
// forced closure of a chosen table and the maximal D ∩ W(subset).
struct ImpartialSubgroup {
  PGroup parent;
  std::vector<ElementId> subset;     // parent ids, ascending
  std::vector<ElementId> to_parent;  // local id -> parent id (== subset)
  PGroup sub;                        // standalone partial group on the subset
  Morphism inclusion() const { return Morphism{sub, parent, to_parent}; }
};

// Verifies (a) (D)f* ⊆ D' and (b) f*Π' = Πf over source domain words, bounded
// by max_len when the source domain has no finite horizon. Violations carry
// axiom = 1 for condition (a) and axiom = 2 for condition (b).
ValidationReport check_morphism(const Morphism& m, std::size_t max_len = 6);

Morphism compose(const Morphism& f, const Morphism& g);
Morphism identity_morphism(PGroup g);
Morphism trivial_map(PGroup source, PGroup target);

// Homomorphic image with domain (D_source)f*, exact for every source kind.
ImpartialSubgroup image(const Morphism& m);

// eq(f, trivial): elements mapping to the unit, with domain D ∩ W(subset).
ImpartialSubgroup kernel(const Morphism& m);

// Builds the partial group on `subset` of `parent` with the given domain,
// names and inversion inherited.
ImpartialSubgroup make_subgroup(PGroup parent, std::vector<ElementId> subset, DomainPtr dom);

// Searches for a bijective morphism with (D)f* = D'. Unit, inversion pairing
// and length-2 domain degrees prune the search. Oracle domains unsupported.
std::optional<Morphism> find_isomorphism(const PGroup& a, const PGroup& b);

}  // namespace pg
