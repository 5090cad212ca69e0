#pragma once

#include "pg/morphism.hpp"

// Free partial groups: over pointed sets via alternating strings, and over
// Set^s objects via bounded saturation inside the group G_X (the free
// product of cyclic factors generated by X with the relations x * i(x) = 1).

namespace pg {

struct PointedSet {
  std::vector<std::string> elements;
  std::size_t basepoint = 0;
};

// (X, S_X, i_X): a set with a marked word set and an involution.
struct SetSObject {
  std::vector<std::string> elements;
  std::vector<ElementId> involution;  // indices into elements
  std::vector<Word> marked_words;     // S_X, words over element indices
};

// Reduced normal form in G_X: syllables (orbit, exponent) with nonzero
// exponents, exponent 1 on involution-fixed orbits, and no adjacent equal
// orbits.
struct GxElement {
  struct Syllable {
    std::int32_t orbit;
    std::int64_t exp;
    bool operator==(const Syllable&) const = default;
  };
  std::vector<Syllable> syllables;
  bool operator==(const GxElement&) const = default;
  bool identity() const { return syllables.empty(); }
};

struct GxElementHash {
  std::size_t operator()(const GxElement& g) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& s : g.syllables) {
      h = h * 0x100000001b3ULL ^ static_cast<std::size_t>(s.orbit);
      h = h * 0x100000001b3ULL ^ static_cast<std::size_t>(s.exp);
    }
    return h;
  }
};

// Orbit structure of X under i_X; owns everything gx arithmetic needs.
class GxContext {
 public:
  explicit GxContext(const SetSObject& x);

  std::size_t generators() const { return orbit_.size(); }
  bool orbit_fixed(std::int32_t orbit) const { return fixed_[static_cast<std::size_t>(orbit)]; }

  GxElement embed_letter(ElementId x) const;
  GxElement embed_word(const Word& w) const;  // the monoid map μ : W(X) -> G_X
  GxElement multiply(const GxElement& a, const GxElement& b) const;
  GxElement invert(const GxElement& a) const;
  std::string to_string(const GxElement& g, const std::vector<std::string>& names) const;

 private:
  void append_reduced(GxElement& acc, std::int32_t orbit, std::int64_t exp) const;

  std::vector<std::int32_t> orbit_;       // element -> orbit id
  std::vector<std::int32_t> sign_;        // +1 canonical generator, -1 its involute
  std::vector<bool> fixed_;               // per element: i_X-fixed
  std::vector<ElementId> orbit_rep_;      // orbit id -> canonical element
};

struct FreePartialGroup {
  PGroup group;
  std::vector<ElementId> generator_embedding;  // input index -> carrier id
  bool truncated = false;

  // Set^s case bookkeeping (empty for the pointed construction):
  std::shared_ptr<const GxContext> gx;
  std::vector<GxElement> carrier_gx;        // carrier id -> normal form
  std::vector<std::vector<Word>> witnesses;  // carrier id -> words over X with μ(w) = element
};

// Free partial group over a pointed set: carrier {1} ⊔ X* ⊔ X̂*, oracle
// domain of alternating strings padded with units, three-case count product.
FreePartialGroup free_pointed(const PointedSet& x, std::size_t enumeration_bound = 6);

// The unique morphism extending a basepoint-preserving map f (given per input
// element; f[basepoint] must be the target unit).
Morphism universal_map_pointed(const FreePartialGroup& fp, const PGroup& target,
                               const std::vector<ElementId>& f);

struct SaturationBounds {
  std::size_t max_word_len = 8;
  std::size_t max_elements = 512;
};

// Bottom-up computation of the smallest impartial subgroup of G_X containing
// X with S_X in its domain: close the seed under subwords, inner-segment
// contraction (adding new carrier elements from segment products),
// inverse-pair padding and carrier inversion, within the given bounds.
FreePartialGroup free_sets(const SetSObject& x, const SaturationBounds& bounds = {});

// The unique morphism extending a Set^s morphism f : X -> U(target); requires
// a complete (untruncated) free object. f is given per input element.
Morphism universal_map_sets(const FreePartialGroup& fs, const SetSObject& x, const PGroup& target,
                            const std::vector<ElementId>& f);

}  // namespace pg
