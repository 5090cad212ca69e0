#pragma once

#include "pg/colimits.hpp"
#include "pg/free.hpp"

// Subgroup taxonomy, generated partial subgroups, quotients as cokernels,
// and the generators-and-relations pipeline at bounded scale.

namespace pg {

struct SubgroupWitness {
  ImpartialSubgroup subgroup;
  bool impartial = false;
  bool partial = false;        // sub-domain equals D ∩ W(subset)
  bool partial_normal = false;
};

// Checks impartiality of (subset, candidate_domain) — or of the maximal
// domain D ∩ W(subset) when no candidate is given — then the partial and
// normality conditions.
SubgroupWitness classify_subset(const PGroup& g, const std::vector<ElementId>& subset,
                                DomainPtr candidate_domain = nullptr);

// Iterates N_i = { Π(w) : w ∈ W(N_{i-1}) ∩ D } from the generators, their
// inverses and the unit, until stable.
SubgroupWitness generated_partial_subgroup(const PGroup& g, const std::vector<ElementId>& generators);

SubgroupWitness intersect_impartial(const std::vector<SubgroupWitness>& subs);

// coker(inclusion) = coeq(inclusion, trivial): the congruence closure seeded
// with (x, unit) for x in the subgroup.
Quotient quotient(const PGroup& g, const SubgroupWitness& h);

// All domain words with product equal to the unit, up to max_len.
std::vector<Word> inner_relations(const PGroup& g, std::size_t max_len);

enum class PresentationVerdict { Verified, BoundedVerified, Inconclusive };

struct PresentationReport {
  FreePartialGroup free_object;                    // M, possibly truncated
  std::vector<ElementId> relation_generators;      // image of R0 in M
  PGroup quotient_group;                           // M / <R0>
  PresentationVerdict verdict = PresentationVerdict::Inconclusive;
  std::optional<Morphism> isomorphism;             // quotient -> g when verified
  std::string note;
};

// Realizes g as a quotient of the free partial group over (carrier, D, i).
// With a complete free object the verdict is Verified iff the quotient is
// isomorphic to g; with a truncated one, BoundedVerified iff the counit is
// surjective with fibers inside the relation congruence.
PresentationReport present_as_quotient_of_free(const PGroup& g, const SaturationBounds& bounds = {});

struct AddRelationsReport {
  FreePartialGroup free_object;      // M+ over (carrier, D ∪ S, i)
  PGroup quotient_group;             // M+ / <R0>
  bool truncated = false;
  bool embedding_verified = false;   // g embeds with S in the quotient domain
  std::optional<Morphism> embedding;
  std::string note;
};

// Freely adds the words of S to the domain of g.
AddRelationsReport add_relations(const PGroup& g, const std::vector<Word>& s,
                                 const SaturationBounds& bounds = {});

}  // namespace pg
