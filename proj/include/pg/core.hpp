#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core data model for finite partial groups: a carrier with unit and
// involution, plus a domain of "multipliable" words and a product map
// defined exactly on that domain.

namespace pg {

using ElementId = std::int32_t;
using Word = std::vector<ElementId>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (ElementId x : w) h = h * 0x100000001b3ULL ^ static_cast<std::size_t>(x + 1);
    return h;
  }
};

class PartialGroup;
using PGroup = std::shared_ptr<const PartialGroup>;

struct DomainError : std::runtime_error {
  Word word;
  explicit DomainError(Word w, const std::string& what)
      : std::runtime_error(what), word(std::move(w)) {}
};

struct UnsupportedModeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A domain node decides membership in D and evaluates the product on members.
// Membership and definedness of the product coincide by contract.
//
// Domains compose structurally: the categorical constructions (products,
// coproducts, quotients, restrictions to subsets) produce domains that are
// exact views over their inputs rather than bounded materializations.
class DomainNode {
 public:
  virtual ~DomainNode() = default;

  // Product of w if w is in D, nullopt otherwise. `self` supplies the
  // carrier, unit and inversion of the owning partial group.
  virtual std::optional<ElementId> try_product(const PartialGroup& self, const Word& w) const = 0;

  // True for oracle-backed domains: membership is decidable but the domain
  // has no finite structural description, so exhaustive validation is
  // unsupported and enumeration must be bounded by the caller.
  virtual bool is_oracle() const { return false; }

  // Word length up to which enumeration captures everything structurally
  // interesting about this domain. SIZE_MAX means "no finite horizon"
  // (full group domains and composites built over them).
  virtual std::size_t natural_horizon(const PartialGroup& self) const = 0;
};

using DomainPtr = std::shared_ptr<const DomainNode>;

// (carrier, D, product, inversion). Immutable after construction; shared
// freely across threads and across derived objects (quotients keep a
// pointer to their base, restrictions to their parent, and so on).
class PartialGroup {
 public:
  PartialGroup(std::vector<std::string> names, ElementId unit, std::vector<ElementId> inv,
               DomainPtr dom);

  std::size_t size() const { return names_.size(); }
  ElementId unit() const { return unit_; }
  ElementId inv(ElementId x) const { return inv_.at(static_cast<std::size_t>(x)); }
  const std::string& name(ElementId x) const { return names_.at(static_cast<std::size_t>(x)); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<ElementId>& inv_table() const { return inv_; }
  const DomainNode& domain() const { return *dom_; }
  const DomainPtr& domain_ptr() const { return dom_; }

  bool valid_id(ElementId x) const {
    return x >= 0 && static_cast<std::size_t>(x) < names_.size();
  }
  std::optional<ElementId> find(const std::string& name) const;

  bool in_domain(const Word& w) const { return dom_->try_product(*this, w).has_value(); }
  std::optional<ElementId> try_product(const Word& w) const { return dom_->try_product(*this, w); }
  // Throws DomainError if w is not in D.
  ElementId product(const Word& w) const;

  std::string word_to_string(const Word& w) const;

 private:
  std::vector<std::string> names_;
  ElementId unit_;
  std::vector<ElementId> inv_;
  DomainPtr dom_;
};

PGroup make_partial_group(std::vector<std::string> names, ElementId unit,
                          std::vector<ElementId> inv, DomainPtr dom);

// ---------------------------------------------------------------------------
// Domain constructors.

// D = W(carrier): the group case. `mul` is the total binary table in
// row-major order; products of longer words fold through it.
DomainPtr full_domain(std::vector<ElementId> mul, std::size_t carrier_size);

// Finite table of words of length >= 2 with their products. The empty word
// (product = unit) and singletons (product = identity) are implicit, and the
// represented domain is the closure of the table under the word sets every
// partial group is forced to contain: unit insertions into any member and
// inverse-pair padding i(w) o w of any member, together with the cancellation
// prefixes those paddings admit.
DomainPtr table_domain(std::vector<std::pair<Word, ElementId>> entries);

// Decidable membership/product oracle with an enumeration bound for sampling.
DomainPtr oracle_domain(std::function<std::optional<ElementId>(const Word&)> eval,
                        std::size_t enumeration_bound);

// Componentwise domain of a direct product. `sizes` are the factor carrier
// sizes; ids of the product carrier are mixed-radix over them (last factor
// fastest).
DomainPtr product_domain(std::vector<PGroup> factors);

// Union of transported summand domains (coproducts). `embed[k]` maps summand
// k's ids into the ambient carrier.
DomainPtr union_domain(std::vector<PGroup> summands, std::vector<std::vector<ElementId>> embed);

// Entrywise image of a base domain along fwd : base carrier -> ambient
// carrier (quotient projections, morphism images).
DomainPtr pushforward_domain(PGroup base, std::vector<ElementId> fwd);

// D(base) ∩ W(subset), relabelled to local ids. `to_base[local]` is the
// parent id of each local element.
DomainPtr restriction_domain(PGroup base, std::vector<ElementId> to_base);

// Intersection of several sub-domains over one parent, relabelled to local
// ids: member iff every part accepts the translated word.
DomainPtr intersection_domain(std::vector<PGroup> parts,
                              std::vector<std::vector<ElementId>> local_to_part);

// Access to a table domain's entries (serialization, saturation tests).
// Returns nullptr if the domain is not table-backed.
const std::vector<std::pair<Word, ElementId>>* table_entries(const DomainNode& dom);
// Access to a full domain's binary table; nullptr if not full.
const std::vector<ElementId>* full_table(const DomainNode& dom);

// ---------------------------------------------------------------------------
// Word operations.

Word concat(const Word& a, const Word& b);
// Reversed sequence with inv applied entrywise; involutive.
Word invert_word(const PartialGroup& g, const Word& w);
// w with unit entries removed.
Word strip_units(const PartialGroup& g, const Word& w);

// All domain words of length <= max_len, in length-then-lex order.
std::vector<Word> domain_words(const PartialGroup& g, std::size_t max_len);

// ---------------------------------------------------------------------------
// Axiom validation.

enum class ValidationMode { Exhaustive, Sampled };

struct Violation {
  int axiom = 0;  // 1..4 per the defining axioms, 0 for structural issues
  Word witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t checked_len = 0;  // scale at which the check ran
  bool ok() const { return violations.empty(); }
};

// Exhaustive mode checks every axiom instance over the domain's structural
// description (group laws for full domains; the table, its paddings and all
// their splits for table domains; enumerated members for composite domains).
// Sampled mode enumerates all words up to max_len and checks axiom instances
// on the members; it is the only mode oracle domains support.
ValidationReport validate_axioms(const PartialGroup& g, ValidationMode mode,
                                 std::size_t max_len = 6);

std::string report_to_string(const PartialGroup& g, const ValidationReport& r);

}  // namespace pg
