#include "pg/morphism.hpp"

#include <algorithm>
#include <numeric>

namespace pg {

namespace {

bool same_carrier(const PGroup& a, const PGroup& b) {
  return a == b || (a->size() == b->size() && a->names() == b->names());
}

std::size_t bounded_len(const PartialGroup& g, std::size_t max_len) {
  // the caller's bound drives oracle and unbounded domains; finite structural
  // horizons cap the sweep
  std::size_t h = g.domain().natural_horizon(g);
  std::size_t len = (h == SIZE_MAX || g.domain().is_oracle()) ? max_len : std::min(h, max_len);
  // keep the sweep within ~2M words
  std::size_t total = 1, lim = 0;
  while (lim < len && total <= 2000000 / std::max<std::size_t>(g.size(), 1)) {
    total *= std::max<std::size_t>(g.size(), 1);
    ++lim;
  }
  return lim;
}

}  // namespace

Word Morphism::apply_word(const Word& w) const {
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = apply(w[i]);
  return r;
}

ValidationReport check_morphism(const Morphism& m, std::size_t max_len) {
  if (!m.source || !m.target) throw std::invalid_argument("morphism: missing endpoint");
  if (m.map.size() != m.source->size())
    throw std::invalid_argument("morphism: map not total on the source carrier");
  ValidationReport rep;
  for (ElementId x : m.map)
    if (!m.target->valid_id(x)) {
      rep.violations.push_back({0, {x}, "image out of range"});
      return rep;
    }
  std::size_t len = bounded_len(*m.source, max_len);
  rep.checked_len = len;
  for (const Word& w : domain_words(*m.source, len)) {
    Word fw = m.apply_word(w);
    auto pt = m.target->try_product(fw);
    if (!pt) {
      rep.violations.push_back(
          {1, w, "condition (a): image word " + m.target->word_to_string(fw) + " not in target domain"});
      continue;
    }
    ElementId ps = m.apply(m.source->product(w));
    if (*pt != ps)
      rep.violations.push_back({2, w,
                                "condition (b): image product " + m.target->name(*pt) +
                                    " != mapped product " + m.target->name(ps)});
  }
  return rep;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!same_carrier(f.target, g.source))
    throw std::invalid_argument("compose: endpoints do not match");
  std::vector<ElementId> map(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i)
    map[i] = g.apply(f.map[i]);
  return Morphism{f.source, g.target, std::move(map)};
}

Morphism identity_morphism(PGroup g) {
  std::vector<ElementId> map(g->size());
  std::iota(map.begin(), map.end(), 0);
  return Morphism{g, g, std::move(map)};
}

Morphism trivial_map(PGroup source, PGroup target) {
  std::vector<ElementId> map(source->size(), target->unit());
  return Morphism{std::move(source), std::move(target), std::move(map)};
}

ImpartialSubgroup make_subgroup(PGroup parent, std::vector<ElementId> subset, DomainPtr dom) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<ElementId> to_local(parent->size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i)
    to_local[static_cast<std::size_t>(subset[i])] = static_cast<ElementId>(i);
  std::vector<std::string> names;
  std::vector<ElementId> inv;
  for (ElementId p : subset) {
    names.push_back(parent->name(p));
    ElementId ip = parent->inv(p);
    if (to_local[static_cast<std::size_t>(ip)] < 0)
      throw std::invalid_argument("subgroup: subset not closed under inversion");
    inv.push_back(to_local[static_cast<std::size_t>(ip)]);
  }
  ElementId unit_local = to_local[static_cast<std::size_t>(parent->unit())];
  if (unit_local < 0) throw std::invalid_argument("subgroup: subset does not contain the unit");
  PGroup sub = make_partial_group(std::move(names), unit_local, std::move(inv), std::move(dom));
  return ImpartialSubgroup{std::move(parent), subset, subset, std::move(sub)};
}

ImpartialSubgroup image(const Morphism& m) {
  std::vector<ElementId> subset = m.map;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<ElementId> to_local(m.target->size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i)
    to_local[static_cast<std::size_t>(subset[i])] = static_cast<ElementId>(i);
  std::vector<ElementId> fwd(m.source->size());
  for (std::size_t x = 0; x < m.source->size(); ++x)
    fwd[x] = to_local[static_cast<std::size_t>(m.map[x])];
  return make_subgroup(m.target, std::move(subset), pushforward_domain(m.source, std::move(fwd)));
}

ImpartialSubgroup kernel(const Morphism& m) {
  std::vector<ElementId> subset;
  for (ElementId x = 0; x < static_cast<ElementId>(m.source->size()); ++x)
    if (m.apply(x) == m.target->unit()) subset.push_back(x);
  return make_subgroup(m.source, subset, restriction_domain(m.source, subset));
}

// ---------------------------------------------------------------------------
// Isomorphism search.

namespace {

struct ElementSignature {
  bool is_unit;
  bool self_inverse;
  int out_degree;   // #{y : (x,y) in D}
  int in_degree;    // #{y : (y,x) in D}
  bool square_in_domain;
  auto operator<=>(const ElementSignature&) const = default;
};

ElementSignature signature_of(const PartialGroup& g, ElementId x) {
  ElementSignature s{};
  s.is_unit = x == g.unit();
  s.self_inverse = g.inv(x) == x;
  s.square_in_domain = g.in_domain({x, x});
  for (ElementId y = 0; y < static_cast<ElementId>(g.size()); ++y) {
    if (g.in_domain({x, y})) ++s.out_degree;
    if (g.in_domain({y, x})) ++s.in_degree;
  }
  return s;
}

// Length at which two domains are compared; one beyond the finite horizons so
// a full domain cannot masquerade as a bounded table.
std::size_t comparison_len(const PartialGroup& a, const PartialGroup& b) {
  std::size_t ha = a.domain().natural_horizon(a);
  std::size_t hb = b.domain().natural_horizon(b);
  std::size_t len = 2;
  if (ha != SIZE_MAX) len = std::max(len, ha);
  if (hb != SIZE_MAX) len = std::max(len, hb);
  len += 1;
  std::size_t total = 1, lim = 0;
  while (lim < len && total <= 500000 / std::max<std::size_t>(a.size(), 1)) {
    total *= std::max<std::size_t>(a.size(), 1);
    ++lim;
  }
  return std::max<std::size_t>(lim, 2);
}

bool domains_match(const Morphism& m, std::size_t len) {
  const PartialGroup& a = *m.source;
  const PartialGroup& b = *m.target;
  std::vector<ElementId> inverse(b.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    inverse[static_cast<std::size_t>(m.map[x])] = static_cast<ElementId>(x);
  for (const Word& w : domain_words(a, len)) {
    Word fw = m.apply_word(w);
    auto pb = b.try_product(fw);
    if (!pb || *pb != m.apply(a.product(w))) return false;
  }
  for (const Word& w : domain_words(b, len)) {
    Word bw(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) bw[i] = inverse[static_cast<std::size_t>(w[i])];
    if (!a.in_domain(bw)) return false;
  }
  return true;
}

struct IsoSearch {
  const PartialGroup& a;
  const PartialGroup& b;
  std::size_t verify_len;
  std::vector<ElementSignature> sig_a, sig_b;
  std::vector<ElementId> assign;  // a id -> b id or -1
  std::vector<bool> used;         // b id taken
  std::optional<Morphism> found;
  PGroup pa, pb;

  // Length-2 consistency over the currently assigned elements.
  bool consistent() const {
    auto n = static_cast<ElementId>(a.size());
    for (ElementId u = 0; u < n; ++u) {
      if (assign[static_cast<std::size_t>(u)] < 0) continue;
      for (ElementId v = 0; v < n; ++v) {
        if (assign[static_cast<std::size_t>(v)] < 0) continue;
        auto qa = a.try_product({u, v});
        auto qb = b.try_product(
            {assign[static_cast<std::size_t>(u)], assign[static_cast<std::size_t>(v)]});
        if (qa.has_value() != qb.has_value()) return false;
        if (qa && assign[static_cast<std::size_t>(*qa)] >= 0 &&
            assign[static_cast<std::size_t>(*qa)] != *qb)
          return false;
      }
    }
    return true;
  }

  void run(ElementId x) {
    if (found) return;
    auto n = static_cast<ElementId>(a.size());
    while (x < n && assign[static_cast<std::size_t>(x)] >= 0) ++x;
    if (x == n) {
      Morphism m{pa, pb, assign};
      if (domains_match(m, verify_len)) found = m;
      return;
    }
    for (ElementId y = 0; y < n && !found; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      if (sig_a[static_cast<std::size_t>(x)] != sig_b[static_cast<std::size_t>(y)]) continue;
      ElementId ix = a.inv(x), iy = b.inv(y);
      if ((ix == x) != (iy == y)) continue;
      bool assigns_pair = ix != x;
      if (assigns_pair && used[static_cast<std::size_t>(iy)]) continue;
      assign[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      if (assigns_pair) {
        assign[static_cast<std::size_t>(ix)] = iy;
        used[static_cast<std::size_t>(iy)] = true;
      }
      if (consistent()) run(x + 1);
      assign[static_cast<std::size_t>(x)] = -1;
      used[static_cast<std::size_t>(y)] = false;
      if (assigns_pair) {
        assign[static_cast<std::size_t>(ix)] = -1;
        used[static_cast<std::size_t>(iy)] = false;
      }
    }
  }
};

}  // namespace

std::optional<Morphism> find_isomorphism(const PGroup& a, const PGroup& b) {
  if (a->domain().is_oracle() || b->domain().is_oracle())
    throw UnsupportedModeError("find_isomorphism: oracle domains unsupported");
  if (a->size() != b->size()) return std::nullopt;
  IsoSearch s{*a,
              *b,
              comparison_len(*a, *b),
              {},
              {},
              std::vector<ElementId>(a->size(), -1),
              std::vector<bool>(b->size(), false),
              std::nullopt,
              a,
              b};
  for (ElementId x = 0; x < static_cast<ElementId>(a->size()); ++x) {
    s.sig_a.push_back(signature_of(*a, x));
    s.sig_b.push_back(signature_of(*b, x));
  }
  {
    auto sa = s.sig_a, sb = s.sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  s.assign[static_cast<std::size_t>(a->unit())] = b->unit();
  s.used[static_cast<std::size_t>(b->unit())] = true;
  s.run(0);
  return s.found;
}

}  // namespace pg
