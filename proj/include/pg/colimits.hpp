#pragma once

#include "pg/morphism.hpp"

// Coproducts, condition-(*) congruence closure, coequalizers and general
// finite colimits.

namespace pg {

// Union-find partition of a carrier closed under condition (*): equal-length
// domain words with componentwise related entries have related products.
// Every merge is logged with its cause, so the partition can be replayed and
// audited from the seed.
class Congruence {
 public:
  explicit Congruence(std::size_t n);

  ElementId find(ElementId x) const;  // smallest id of the class
  bool related(ElementId a, ElementId b) const { return find(a) == find(b); }
  // True if the merge changed the partition.
  bool merge(ElementId a, ElementId b);
  std::size_t size() const { return parent_.size(); }
  std::size_t class_count() const;
  std::vector<std::vector<ElementId>> classes() const;

  struct MergeRecord {
    ElementId a, b;
    bool from_seed;
    Word left, right;  // the condition-(*) instance for product-rule merges
  };
  const std::vector<MergeRecord>& log() const { return log_; }
  void record(MergeRecord r) { log_.push_back(std::move(r)); }

 private:
  mutable std::vector<ElementId> parent_;
  std::vector<MergeRecord> log_;
};

struct Coproduct {
  PGroup group;
  std::vector<Morphism> injections;
};

// Disjoint union with all units identified; D is the union of the summand
// domains transported along the injections. The empty coproduct is the
// trivial group.
Coproduct coproduct(const std::vector<PGroup>& summands);

// Smallest equivalence relation containing the seed pairs and satisfying
// condition (*). Closure over length-2 domain words: longer instances follow
// by contracting leading pairs, so they can never force additional merges.
Congruence congruence_closure(const PGroup& g, const std::vector<std::pair<ElementId, ElementId>>& seed);

struct Quotient {
  PGroup group;
  Morphism projection;
};

// Carrier = classes, D = entrywise image of D(g), product of a class word =
// class of the product of any lift. Throws if the congruence is not
// (*)-closed for g.
Quotient quotient_by_congruence(const PGroup& g, const Congruence& r);

// Coequalizer of a parallel pair: congruence closure of the seed
// {(xf, xg)} on the target, then the quotient.
Quotient coequalizer(const Morphism& f, const Morphism& g);

// Classes of the pointed-set coequalizer (no condition (*)); the underlying
// set-level construction the paper contrasts against.
std::vector<std::vector<ElementId>> set_coequalizer_classes(const Morphism& f, const Morphism& g);

// The unique ψ with t∘ψ = τ for a coequalizing τ; throws if τ does not
// coequalize (is not constant on the classes of the projection).
Morphism mediating_cocone_map(const Quotient& q, const Morphism& tau);

struct Diagram {
  std::vector<PGroup> objects;
  struct Arrow {
    std::size_t source, target;
    Morphism morphism;
  };
  std::vector<Arrow> arrows;
};

struct Colimit {
  PGroup group;
  std::vector<Morphism> cocone;
};

// Coequalizer of the two canonical maps  ⊔(arrow sources) ⇉ ⊔(objects).
Colimit finite_colimit(const Diagram& d);

}  // namespace pg
