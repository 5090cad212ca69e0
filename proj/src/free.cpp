#include "pg/free.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace pg {

// ---------------------------------------------------------------------------
// G_X arithmetic.

GxContext::GxContext(const SetSObject& x) {
  auto n = static_cast<ElementId>(x.elements.size());
  if (x.involution.size() != x.elements.size())
    throw std::invalid_argument("sets object: involution size mismatch");
  orbit_.assign(x.elements.size(), -1);
  sign_.assign(x.elements.size(), 1);
  fixed_.assign(x.elements.size(), false);
  for (ElementId e = 0; e < n; ++e) {
    ElementId p = x.involution[static_cast<std::size_t>(e)];
    if (p < 0 || p >= n || x.involution[static_cast<std::size_t>(p)] != e)
      throw std::invalid_argument("sets object: involution not involutive");
    if (orbit_[static_cast<std::size_t>(e)] >= 0) continue;
    auto id = static_cast<std::int32_t>(orbit_rep_.size());
    orbit_rep_.push_back(std::min(e, p));
    orbit_[static_cast<std::size_t>(e)] = id;
    orbit_[static_cast<std::size_t>(p)] = id;
    fixed_[static_cast<std::size_t>(e)] = e == p;
    fixed_[static_cast<std::size_t>(p)] = e == p;
    sign_[static_cast<std::size_t>(std::min(e, p))] = 1;
    sign_[static_cast<std::size_t>(std::max(e, p))] = e == p ? 1 : -1;
  }
}

void GxContext::append_reduced(GxElement& acc, std::int32_t orbit, std::int64_t exp) const {
  if (fixed_[static_cast<std::size_t>(orbit_rep_[static_cast<std::size_t>(orbit)])])
    exp = ((exp % 2) + 2) % 2;
  if (exp == 0) return;
  if (!acc.syllables.empty() && acc.syllables.back().orbit == orbit) {
    std::int64_t merged = acc.syllables.back().exp + exp;
    if (fixed_[static_cast<std::size_t>(orbit_rep_[static_cast<std::size_t>(orbit)])])
      merged = ((merged % 2) + 2) % 2;
    acc.syllables.pop_back();
    if (merged != 0) acc.syllables.push_back({orbit, merged});
  } else {
    acc.syllables.push_back({orbit, exp});
  }
}

GxElement GxContext::embed_letter(ElementId x) const {
  GxElement g;
  append_reduced(g, orbit_[static_cast<std::size_t>(x)],
                 fixed_[static_cast<std::size_t>(x)] ? 1 : sign_[static_cast<std::size_t>(x)]);
  return g;
}

GxElement GxContext::embed_word(const Word& w) const {
  GxElement acc;
  for (ElementId x : w) {
    const GxElement letter = embed_letter(x);
    for (const auto& s : letter.syllables) append_reduced(acc, s.orbit, s.exp);
  }
  return acc;
}

GxElement GxContext::multiply(const GxElement& a, const GxElement& b) const {
  GxElement acc = a;
  for (const auto& s : b.syllables) append_reduced(acc, s.orbit, s.exp);
  return acc;
}

GxElement GxContext::invert(const GxElement& a) const {
  GxElement r;
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
    append_reduced(r, it->orbit, -it->exp);
  return r;
}

std::string GxContext::to_string(const GxElement& g, const std::vector<std::string>& names) const {
  if (g.identity()) return "1";
  std::string s;
  for (std::size_t i = 0; i < g.syllables.size(); ++i) {
    if (i) s += "*";
    const auto& syl = g.syllables[i];
    s += names[static_cast<std::size_t>(orbit_rep_[static_cast<std::size_t>(syl.orbit)])];
    if (syl.exp != 1) s += "^" + std::to_string(syl.exp);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Free partial groups over pointed sets.

FreePartialGroup free_pointed(const PointedSet& x, std::size_t enumeration_bound) {
  if (x.elements.empty() || x.basepoint >= x.elements.size())
    throw std::invalid_argument("free_pointed: bad pointed set");
  std::vector<std::string> names{x.elements[x.basepoint]};
  std::vector<ElementId> inv{0};
  std::vector<ElementId> embed(x.elements.size(), 0);
  for (std::size_t i = 0; i < x.elements.size(); ++i) {
    if (i == x.basepoint) continue;
    embed[i] = static_cast<ElementId>(names.size());
    names.push_back(x.elements[i]);
    names.push_back(x.elements[i] + "^");
    inv.push_back(static_cast<ElementId>(inv.size()) + 1);
    inv.push_back(static_cast<ElementId>(inv.size()) - 1);
  }

  // Words that are alternating strings (..., x, x^, x, ...) built on a single
  // generator, with units inserted anywhere. The product counts the balance.
  auto eval = [](const Word& w) -> std::optional<ElementId> {
    ElementId plain = -1, hat = -1, prev = -1;
    int balance = 0;
    for (ElementId e : w) {
      if (e == 0) continue;
      if (e < 0) return std::nullopt;
      ElementId p = (e - 1) % 2 == 0 ? e : static_cast<ElementId>(e - 1);
      if (plain < 0) {
        plain = p;
        hat = p + 1;
      }
      if (e != plain && e != hat) return std::nullopt;
      if (e == prev) return std::nullopt;  // not alternating
      prev = e;
      balance += e == plain ? 1 : -1;
    }
    if (plain < 0) return 0;
    if (balance > 0) return plain;
    if (balance < 0) return hat;
    return 0;
  };
  PGroup g = make_partial_group(std::move(names), 0, std::move(inv),
                                oracle_domain(eval, enumeration_bound));
  FreePartialGroup fp;
  fp.group = std::move(g);
  fp.generator_embedding = std::move(embed);
  return fp;
}

Morphism universal_map_pointed(const FreePartialGroup& fp, const PGroup& target,
                               const std::vector<ElementId>& f) {
  if (f.size() != fp.generator_embedding.size())
    throw std::invalid_argument("universal_map_pointed: map size mismatch");
  std::vector<ElementId> map(fp.group->size(), target->unit());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!target->valid_id(f[i]))
      throw std::invalid_argument("universal_map_pointed: image out of range");
    ElementId gid = fp.generator_embedding[i];
    if (gid == fp.group->unit()) {
      if (f[i] != target->unit())
        throw std::invalid_argument("universal_map_pointed: basepoint must map to the unit");
      continue;
    }
    map[static_cast<std::size_t>(gid)] = f[i];
    map[static_cast<std::size_t>(fp.group->inv(gid))] = target->inv(f[i]);
  }
  return Morphism{fp.group, target, std::move(map)};
}

// ---------------------------------------------------------------------------
// Saturation inside G_X.

namespace {

Word invert_input_word(const SetSObject& x, const Word& w) {
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    r[w.size() - 1 - i] = x.involution[static_cast<std::size_t>(w[i])];
  return r;
}

struct Saturation {
  const SetSObject& x;
  std::shared_ptr<GxContext> ctx;
  SaturationBounds bounds;

  std::vector<GxElement> elems;
  std::unordered_map<GxElement, ElementId, GxElementHash> index;
  std::vector<std::vector<Word>> witnesses;  // words over X
  std::vector<ElementId> inv_id;
  std::unordered_set<Word, WordHash> stored;
  std::deque<Word> worklist;
  bool truncated = false;

  static constexpr std::size_t kMaxWitnesses = 16;
  static constexpr std::size_t kMaxStoredWords = 700000;

  void note_witness(ElementId id, const Word& w) {
    auto& ws = witnesses[static_cast<std::size_t>(id)];
    if (ws.size() < kMaxWitnesses && std::find(ws.begin(), ws.end(), w) == ws.end())
      ws.push_back(w);
  }

  // Adds g together with its inverse, or neither; nullopt on element overflow.
  std::optional<ElementId> add_element(const GxElement& g, const Word& witness) {
    if (auto it = index.find(g); it != index.end()) {
      note_witness(it->second, witness);
      return it->second;
    }
    GxElement gi = ctx->invert(g);
    std::size_t need = gi == g ? 1 : 2;
    if (elems.size() + need > bounds.max_elements) {
      truncated = true;
      return std::nullopt;
    }
    auto id = static_cast<ElementId>(elems.size());
    elems.push_back(g);
    index.emplace(g, id);
    witnesses.push_back({witness});
    ElementId iid = id;
    if (need == 2) {
      iid = static_cast<ElementId>(elems.size());
      elems.push_back(gi);
      index.emplace(gi, iid);
      witnesses.push_back({invert_input_word(x, witness)});
      inv_id.push_back(-1);
    }
    inv_id.push_back(-1);
    inv_id[static_cast<std::size_t>(id)] = iid;
    inv_id[static_cast<std::size_t>(iid)] = id;
    // axiom 4 for the singletons
    add_word({iid, id});
    if (need == 2) add_word({id, iid});
    return id;
  }

  // Canonical storage: boundary units go (subword closure), interior unit
  // runs collapse to one (contracting a (1,1) segment). Membership of every
  // unit-inserted variant is recovered by the table's deletion rule.
  static Word canonical(Word w) {
    Word out;
    for (ElementId e : w) {
      if (e == 0 && (out.empty() || out.back() == 0)) continue;
      out.push_back(e);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }

  void add_word(Word w) {
    w = canonical(std::move(w));
    if (w.size() < 2 || w.size() > bounds.max_word_len) return;
    if (stored.contains(w)) return;
    if (stored.size() >= kMaxStoredWords) {
      truncated = true;
      return;
    }
    stored.insert(w);
    worklist.push_back(std::move(w));
  }

  Word witness_of_segment(const Word& w, std::size_t i, std::size_t j) const {
    Word out;
    for (std::size_t k = i; k < j; ++k) {
      const auto& ws = witnesses[static_cast<std::size_t>(w[k])];
      out.insert(out.end(), ws.front().begin(), ws.front().end());
    }
    return out;
  }

  void process(const Word& w) {
    std::size_t n = w.size();
    std::vector<GxElement> pre(n + 1);
    for (std::size_t i = 0; i < n; ++i)
      pre[i + 1] = ctx->multiply(pre[i], elems[static_cast<std::size_t>(w[i])]);

    // axiom 1: both halves of every split
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      add_word(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
      add_word(Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
    }
    // axiom 3: contract every inner segment, adding its product to the carrier
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 2; j <= n; ++j) {
        GxElement seg = ctx->multiply(ctx->invert(pre[i]), pre[j]);
        auto id = add_element(seg, witness_of_segment(w, i, j));
        if (!id) continue;
        Word contracted(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        contracted.push_back(*id);
        contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
        add_word(std::move(contracted));
      }
    }
    // axiom 4: materialize the padding while it fits the length bound. Once
    // the carrier has overflowed the result is truncated anyway, so padding
    // material is no longer explored.
    if (!truncated && 2 * n <= bounds.max_word_len) {
      Word pad(n);
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        ElementId iv = inv_id[static_cast<std::size_t>(w[n - 1 - i])];
        ok = ok && iv >= 0;
        pad[i] = iv;
      }
      if (ok) {
        pad.insert(pad.end(), w.begin(), w.end());
        add_word(std::move(pad));
      }
    }
  }
};

}  // namespace

FreePartialGroup free_sets(const SetSObject& x, const SaturationBounds& bounds) {
  if (x.elements.empty()) throw std::invalid_argument("free_sets: empty input set");
  if (bounds.max_elements < x.elements.size() + 1)
    throw std::invalid_argument("free_sets: max_elements below carrier minimum");
  for (const auto& s : x.marked_words) {
    if (s.size() > bounds.max_word_len)
      throw std::invalid_argument("free_sets: marked word longer than max_word_len");
    for (ElementId e : s)
      if (e < 0 || static_cast<std::size_t>(e) >= x.elements.size())
        throw std::invalid_argument("free_sets: marked word with invalid element");
  }

  Saturation sat{x, std::make_shared<GxContext>(x), bounds, {}, {}, {}, {}, {}, {}, false};
  sat.add_element(GxElement{}, Word{});  // the unit of the free object
  std::vector<ElementId> embed(x.elements.size());
  for (ElementId e = 0; e < static_cast<ElementId>(x.elements.size()); ++e) {
    auto id = sat.add_element(sat.ctx->embed_letter(e), Word{e});
    if (!id) throw std::invalid_argument("free_sets: bounds below minimum");
    embed[static_cast<std::size_t>(e)] = *id;
  }
  for (const auto& s : x.marked_words) {
    Word local(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      local[i] = embed[static_cast<std::size_t>(s[i])];
    sat.add_word(std::move(local));
  }
  while (!sat.worklist.empty()) {
    Word w = std::move(sat.worklist.front());
    sat.worklist.pop_front();
    sat.process(w);
  }

  // Assemble the partial group; drop words whose product fell beyond the
  // element bound.
  std::vector<std::string> names;
  std::unordered_set<std::string> taken;
  for (const auto& g : sat.elems) {
    std::string n = sat.ctx->to_string(g, x.elements);
    while (!taken.insert(n).second) n += "'";  // the file format reserves '#'
    names.push_back(std::move(n));
  }
  std::vector<ElementId> inv = sat.inv_id;
  std::vector<std::pair<Word, ElementId>> entries;
  for (const auto& w : sat.stored) {
    GxElement prod;
    for (ElementId e : w) prod = sat.ctx->multiply(prod, sat.elems[static_cast<std::size_t>(e)]);
    auto it = sat.index.find(prod);
    if (it == sat.index.end()) {
      sat.truncated = true;  // product fell beyond the element bound
      continue;
    }
    entries.emplace_back(w, it->second);
  }

  FreePartialGroup out;
  out.group = make_partial_group(std::move(names), 0, std::move(inv), table_domain(std::move(entries)));
  out.generator_embedding = std::move(embed);
  out.truncated = sat.truncated;
  out.gx = sat.ctx;
  out.carrier_gx = std::move(sat.elems);
  out.witnesses = std::move(sat.witnesses);
  return out;
}

Morphism universal_map_sets(const FreePartialGroup& fs, const SetSObject& x, const PGroup& target,
                            const std::vector<ElementId>& f) {
  if (!fs.group || fs.witnesses.empty())
    throw std::invalid_argument("universal_map_sets: not a Set^s free object");
  if (fs.truncated)
    throw std::invalid_argument("universal_map_sets: free object is truncated");
  if (f.size() != x.elements.size())
    throw std::invalid_argument("universal_map_sets: map size mismatch");
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (!target->valid_id(f[e]))
      throw std::invalid_argument("universal_map_sets: image out of range");
    if (target->inv(f[e]) != f[x.involution[e]])
      throw std::invalid_argument("universal_map_sets: map does not commute with the involutions");
  }
  auto apply_f = [&](const Word& w) {
    Word r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[i] = f[static_cast<std::size_t>(w[i])];
    return r;
  };
  for (const auto& s : x.marked_words)
    if (!target->in_domain(apply_f(s)))
      throw std::invalid_argument("universal_map_sets: (S_X)f* not contained in the target domain");

  std::vector<ElementId> map(fs.group->size());
  for (std::size_t c = 0; c < fs.group->size(); ++c) {
    std::optional<ElementId> value;
    bool any = false;
    for (const Word& wit : fs.witnesses[c]) {
      auto p = target->try_product(apply_f(wit));
      if (!p) continue;
      any = true;
      if (!value) value = *p;
      if (*value != *p)
        throw std::runtime_error("universal_map_sets: witnesses disagree (saturation bug)");
    }
    if (!any)
      throw std::runtime_error("universal_map_sets: no witness evaluates in the target");
    map[c] = *value;
  }
  return Morphism{fs.group, target, std::move(map)};
}

}  // namespace pg
