#include "pg/core.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pg {

namespace {

// Unit-block profile: sizes of the unit runs around the non-unit letters.
// A word with k non-unit letters has k+1 blocks.
std::vector<std::size_t> unit_blocks(const PartialGroup& g, const Word& w) {
  std::vector<std::size_t> blocks(1, 0);
  for (ElementId x : w) {
    if (x == g.unit())
      ++blocks.back();
    else
      blocks.push_back(0);
  }
  return blocks;
}

// a <= b componentwise; equal length assumed.
bool profile_le(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

class FullDomain final : public DomainNode {
 public:
  FullDomain(std::vector<ElementId> mul, std::size_t n) : mul_(std::move(mul)), n_(n) {
    if (mul_.size() != n_ * n_) throw std::invalid_argument("full_domain: table size mismatch");
  }

  ElementId times(ElementId a, ElementId b) const {
    return mul_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
  }

  std::optional<ElementId> try_product(const PartialGroup& self, const Word& w) const override {
    ElementId r = self.unit();
    for (ElementId x : w) {
      if (!self.valid_id(x)) return std::nullopt;
      r = times(r, x);
    }
    return r;
  }

  std::size_t natural_horizon(const PartialGroup&) const override { return SIZE_MAX; }

  const std::vector<ElementId>& table() const { return mul_; }

 private:
  std::vector<ElementId> mul_;
  std::size_t n_;
};

class TableDomain final : public DomainNode {
 public:
  explicit TableDomain(std::vector<std::pair<Word, ElementId>> entries)
      : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
    for (const auto& [w, p] : entries_) max_len_ = std::max(max_len_, w.size());
  }

  std::optional<ElementId> try_product(const PartialGroup& self, const Word& w) const override {
    for (ElementId x : w)
      if (!self.valid_id(x)) return std::nullopt;
    std::call_once(index_once_, [&] { build_index(self); });
    std::unordered_map<Word, std::optional<ElementId>, WordHash> memo;
    return eval(self, w, memo);
  }

  std::optional<ElementId> eval(const PartialGroup& self, const Word& w,
                                std::unordered_map<Word, std::optional<ElementId>, WordHash>& memo) const {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    memo.emplace(w, std::nullopt);  // cuts re-derivation cycles
    auto result = eval_uncached(self, w, memo);
    memo[w] = result;
    return result;
  }

  std::optional<ElementId> eval_uncached(
      const PartialGroup& self, const Word& w,
      std::unordered_map<Word, std::optional<ElementId>, WordHash>& memo) const {
    Word s = strip_units(self, w);

    // Listed word, possibly with extra unit entries (unit insertion keeps
    // both membership and the product).
    if (auto it = by_strip_.find(s); it != by_strip_.end()) {
      auto wb = unit_blocks(self, w);
      for (std::size_t idx : it->second)
        if (profile_le(blocks_[idx], wb)) return entries_[idx].second;
    }
    if (s.empty()) return self.unit();
    if (s.size() == 1) return s[0];

    // Cancellable head: w embeds some i(p) o p o v with p o v a member
    // (v empty is the inverse-pair padding of axiom 4). The unit blocks of w
    // bound p's blocks on both the mirror side and the remainder side, so it
    // suffices to test the blockwise-maximal remainder.
    auto b = unit_blocks(self, w);
    std::size_t m = s.size();
    for (std::size_t k = 1; 2 * k <= m; ++k) {
      bool mirrored = true;
      for (std::size_t j = 0; j < k && mirrored; ++j)
        mirrored = s[j] == self.inv(s[2 * k - 1 - j]);
      if (!mirrored) continue;
      Word rmax;
      auto push_units = [&](std::size_t count) { rmax.insert(rmax.end(), count, self.unit()); };
      push_units(b[k] / 2);
      for (std::size_t j = 1; j <= k; ++j) {
        rmax.push_back(s[k + j - 1]);
        if (j < k)
          push_units(std::min(b[k - j], b[k + j]));
        else
          push_units(2 * k == m ? std::min(b[0], b[2 * k]) : b[2 * k]);
      }
      for (std::size_t j = 2 * k; j < m; ++j) {
        rmax.push_back(s[j]);
        push_units(b[j + 1]);
      }
      if (!eval(self, rmax, memo).has_value()) continue;
      if (2 * k == m) return self.unit();
      // product of w = product of the part after i(p) o p: the suffix of
      // rmax past its k-th non-unit letter, itself a subword of rmax
      std::size_t idx = 0;
      for (std::size_t seen = 0; idx < rmax.size() && seen < k; ++idx)
        if (rmax[idx] != self.unit()) ++seen;
      return eval(self, Word(rmax.begin() + static_cast<std::ptrdiff_t>(idx), rmax.end()), memo);
    }

    // The mirrored tail rule is the head rule on the inverted word; the
    // in-progress memo entry stops the flip-flop.
    Word iw = invert_word(self, w);
    if (iw != w)
      if (auto p = eval(self, iw, memo)) return self.inv(*p);
    return std::nullopt;
  }

  std::size_t natural_horizon(const PartialGroup&) const override {
    return 2 * std::max<std::size_t>(max_len_, 1);
  }

  const std::vector<std::pair<Word, ElementId>>& entries() const { return entries_; }

 private:
  void build_index(const PartialGroup& self) const {
    blocks_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      blocks_.push_back(unit_blocks(self, entries_[i].first));
      by_strip_[strip_units(self, entries_[i].first)].push_back(i);
    }
  }

  std::vector<std::pair<Word, ElementId>> entries_;
  std::size_t max_len_ = 0;
  mutable std::once_flag index_once_;
  mutable std::unordered_map<Word, std::vector<std::size_t>, WordHash> by_strip_;
  mutable std::vector<std::vector<std::size_t>> blocks_;
};

class OracleDomain final : public DomainNode {
 public:
  OracleDomain(std::function<std::optional<ElementId>(const Word&)> eval, std::size_t bound)
      : eval_(std::move(eval)), bound_(bound) {}

  std::optional<ElementId> try_product(const PartialGroup&, const Word& w) const override {
    return eval_(w);
  }
  bool is_oracle() const override { return true; }
  std::size_t natural_horizon(const PartialGroup&) const override { return bound_; }

 private:
  std::function<std::optional<ElementId>(const Word&)> eval_;
  std::size_t bound_;
};

class ProductDomain final : public DomainNode {
 public:
  explicit ProductDomain(std::vector<PGroup> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) sizes_.push_back(f->size());
  }

  std::optional<ElementId> try_product(const PartialGroup& self, const Word& w) const override {
    for (ElementId x : w)
      if (!self.valid_id(x)) return std::nullopt;
    ElementId result = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      Word proj(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) proj[i] = component(w[i], k);
      auto p = factors_[k]->try_product(proj);
      if (!p) return std::nullopt;
      result = result * static_cast<ElementId>(sizes_[k]) + *p;
    }
    return result;
  }

  std::size_t natural_horizon(const PartialGroup&) const override {
    std::size_t h = 2;
    for (const auto& f : factors_) {
      std::size_t fh = f->domain().natural_horizon(*f);
      if (fh == SIZE_MAX) return SIZE_MAX;
      h = std::max(h, fh);
    }
    return h;
  }

  ElementId component(ElementId id, std::size_t k) const {
    for (std::size_t j = factors_.size(); j-- > k + 1;) id /= static_cast<ElementId>(sizes_[j]);
    return id % static_cast<ElementId>(sizes_[k]);
  }

 private:
  std::vector<PGroup> factors_;
  std::vector<std::size_t> sizes_;
};

class UnionDomain final : public DomainNode {
 public:
  UnionDomain(std::vector<PGroup> summands, std::vector<std::vector<ElementId>> embed,
              std::size_t ambient_size)
      : summands_(std::move(summands)), embed_(std::move(embed)) {
    pre_.assign(summands_.size(), {});
    for (std::size_t k = 0; k < summands_.size(); ++k) {
      pre_[k].assign(ambient_size, -1);
      for (std::size_t x = 0; x < embed_[k].size(); ++x)
        pre_[k][static_cast<std::size_t>(embed_[k][x])] = static_cast<ElementId>(x);
    }
  }

  std::optional<ElementId> try_product(const PartialGroup& self, const Word& w) const override {
    for (ElementId x : w)
      if (!self.valid_id(x)) return std::nullopt;
    if (w.empty()) return self.unit();
    for (std::size_t k = 0; k < summands_.size(); ++k) {
      Word lift(w.size());
      bool liftable = true;
      for (std::size_t i = 0; i < w.size() && liftable; ++i) {
        ElementId p = pre_[k][static_cast<std::size_t>(w[i])];
        liftable = p >= 0;
        lift[i] = p;
      }
      if (!liftable) continue;
      if (auto p = summands_[k]->try_product(lift)) return embed_[k][static_cast<std::size_t>(*p)];
    }
    return std::nullopt;
  }

  std::size_t natural_horizon(const PartialGroup&) const override {
    std::size_t h = 2;
    for (const auto& s : summands_) {
      std::size_t sh = s->domain().natural_horizon(*s);
      if (sh == SIZE_MAX) return SIZE_MAX;
      h = std::max(h, sh);
    }
    return h;
  }

 private:
  std::vector<PGroup> summands_;
  std::vector<std::vector<ElementId>> embed_;
  std::vector<std::vector<ElementId>> pre_;
};

class PushforwardDomain final : public DomainNode {
 public:
  PushforwardDomain(PGroup base, std::vector<ElementId> fwd, std::size_t ambient_size)
      : base_(std::move(base)), fwd_(std::move(fwd)) {
    pre_.assign(ambient_size, {});
    for (std::size_t x = 0; x < fwd_.size(); ++x)
      pre_[static_cast<std::size_t>(fwd_[x])].push_back(static_cast<ElementId>(x));
  }

  std::optional<ElementId> try_product(const PartialGroup& self, const Word& w) const override {
    for (ElementId x : w)
      if (!self.valid_id(x)) return std::nullopt;
    Word lift(w.size());
    std::optional<ElementId> found;
    search(w, 0, lift, found);
    return found;
  }

  std::size_t natural_horizon(const PartialGroup&) const override {
    return base_->domain().natural_horizon(*base_);
  }

 private:
  void search(const Word& w, std::size_t i, Word& lift, std::optional<ElementId>& found) const {
    if (found) return;
    if (i == w.size()) {
      if (auto p = base_->try_product(lift)) found = fwd_[static_cast<std::size_t>(*p)];
      return;
    }
    for (ElementId c : pre_[static_cast<std::size_t>(w[i])]) {
      lift[i] = c;
      search(w, i + 1, lift, found);
      if (found) return;
    }
  }

  PGroup base_;
  std::vector<ElementId> fwd_;
  std::vector<std::vector<ElementId>> pre_;
};

class RestrictionDomain final : public DomainNode {
 public:
  RestrictionDomain(PGroup base, std::vector<ElementId> to_base)
      : base_(std::move(base)), to_base_(std::move(to_base)) {
    to_local_.assign(base_->size(), -1);
    for (std::size_t x = 0; x < to_base_.size(); ++x)
      to_local_[static_cast<std::size_t>(to_base_[x])] = static_cast<ElementId>(x);
  }

  std::optional<ElementId> try_product(const PartialGroup&, const Word& w) const override {
    Word mapped(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < 0 || static_cast<std::size_t>(w[i]) >= to_base_.size()) return std::nullopt;
      mapped[i] = to_base_[static_cast<std::size_t>(w[i])];
    }
    auto p = base_->try_product(mapped);
    if (!p) return std::nullopt;
    ElementId local = to_local_[static_cast<std::size_t>(*p)];
    if (local < 0) return std::nullopt;  // product escapes the subset
    return local;
  }

  std::size_t natural_horizon(const PartialGroup&) const override {
    return base_->domain().natural_horizon(*base_);
  }

 private:
  PGroup base_;
  std::vector<ElementId> to_base_;
  std::vector<ElementId> to_local_;
};

class IntersectionDomain final : public DomainNode {
 public:
  IntersectionDomain(std::vector<PGroup> parts, std::vector<std::vector<ElementId>> local_to_part)
      : parts_(std::move(parts)), to_part_(std::move(local_to_part)) {
    from_part_.resize(parts_.size());
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      from_part_[k].assign(parts_[k]->size(), -1);
      for (std::size_t x = 0; x < to_part_[k].size(); ++x)
        from_part_[k][static_cast<std::size_t>(to_part_[k][x])] = static_cast<ElementId>(x);
    }
  }

  std::optional<ElementId> try_product(const PartialGroup&, const Word& w) const override {
    std::optional<ElementId> result;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      Word mapped(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || static_cast<std::size_t>(w[i]) >= to_part_[k].size()) return std::nullopt;
        mapped[i] = to_part_[k][static_cast<std::size_t>(w[i])];
      }
      auto p = parts_[k]->try_product(mapped);
      if (!p) return std::nullopt;
      ElementId local = from_part_[k][static_cast<std::size_t>(*p)];
      if (local < 0) return std::nullopt;
      if (!result) result = local;
    }
    return result;
  }

  std::size_t natural_horizon(const PartialGroup&) const override {
    std::size_t h = 2;
    for (const auto& p : parts_) h = std::max(h, p->domain().natural_horizon(*p));
    return h;
  }

 private:
  std::vector<PGroup> parts_;
  std::vector<std::vector<ElementId>> to_part_;
  std::vector<std::vector<ElementId>> from_part_;
};

}  // namespace

// ---------------------------------------------------------------------------

PartialGroup::PartialGroup(std::vector<std::string> names, ElementId unit,
                           std::vector<ElementId> inv, DomainPtr dom)
    : names_(std::move(names)), unit_(unit), inv_(std::move(inv)), dom_(std::move(dom)) {
  if (names_.empty()) throw std::invalid_argument("partial group: empty carrier");
  if (!dom_) throw std::invalid_argument("partial group: missing domain");
  if (!valid_id(unit_)) throw std::invalid_argument("partial group: unit id out of range");
  if (inv_.size() != names_.size())
    throw std::invalid_argument("partial group: inversion table size mismatch");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw std::invalid_argument("partial group: duplicate name " + n);
  for (ElementId x = 0; x < static_cast<ElementId>(size()); ++x) {
    if (!valid_id(this->inv(x)))
      throw std::invalid_argument("partial group: inversion out of range");
    if (this->inv(this->inv(x)) != x)
      throw std::invalid_argument("partial group: inversion not involutive");
  }
  if (this->inv(unit_) != unit_) throw std::invalid_argument("partial group: inv(unit) != unit");
}

std::optional<ElementId> PartialGroup::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<ElementId>(i);
  return std::nullopt;
}

ElementId PartialGroup::product(const Word& w) const {
  auto p = try_product(w);
  if (!p) throw DomainError(w, "word not in domain: " + word_to_string(w));
  return *p;
}

std::string PartialGroup::word_to_string(const Word& w) const {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += valid_id(w[i]) ? name(w[i]) : "?" + std::to_string(w[i]);
  }
  return s + ")";
}

PGroup make_partial_group(std::vector<std::string> names, ElementId unit,
                          std::vector<ElementId> inv, DomainPtr dom) {
  return std::make_shared<PartialGroup>(std::move(names), unit, std::move(inv), std::move(dom));
}

DomainPtr full_domain(std::vector<ElementId> mul, std::size_t carrier_size) {
  return std::make_shared<FullDomain>(std::move(mul), carrier_size);
}

DomainPtr table_domain(std::vector<std::pair<Word, ElementId>> entries) {
  return std::make_shared<TableDomain>(std::move(entries));
}

DomainPtr oracle_domain(std::function<std::optional<ElementId>(const Word&)> eval,
                        std::size_t enumeration_bound) {
  return std::make_shared<OracleDomain>(std::move(eval), enumeration_bound);
}

DomainPtr product_domain(std::vector<PGroup> factors) {
  return std::make_shared<ProductDomain>(std::move(factors));
}

DomainPtr union_domain(std::vector<PGroup> summands, std::vector<std::vector<ElementId>> embed) {
  std::size_t ambient = 1;
  for (const auto& e : embed)
    for (ElementId x : e) ambient = std::max(ambient, static_cast<std::size_t>(x) + 1);
  return std::make_shared<UnionDomain>(std::move(summands), std::move(embed), ambient);
}

DomainPtr pushforward_domain(PGroup base, std::vector<ElementId> fwd) {
  std::size_t ambient = 1;
  for (ElementId x : fwd) ambient = std::max(ambient, static_cast<std::size_t>(x) + 1);
  return std::make_shared<PushforwardDomain>(std::move(base), std::move(fwd), ambient);
}

DomainPtr restriction_domain(PGroup base, std::vector<ElementId> to_base) {
  return std::make_shared<RestrictionDomain>(std::move(base), std::move(to_base));
}

DomainPtr intersection_domain(std::vector<PGroup> parts,
                              std::vector<std::vector<ElementId>> local_to_part) {
  return std::make_shared<IntersectionDomain>(std::move(parts), std::move(local_to_part));
}

const std::vector<std::pair<Word, ElementId>>* table_entries(const DomainNode& dom) {
  auto* t = dynamic_cast<const TableDomain*>(&dom);
  return t ? &t->entries() : nullptr;
}

const std::vector<ElementId>* full_table(const DomainNode& dom) {
  auto* f = dynamic_cast<const FullDomain*>(&dom);
  return f ? &f->table() : nullptr;
}

// ---------------------------------------------------------------------------

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word invert_word(const PartialGroup& g, const Word& w) {
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[w.size() - 1 - i] = g.inv(w[i]);
  return r;
}

Word strip_units(const PartialGroup& g, const Word& w) {
  Word r;
  for (ElementId x : w)
    if (x != g.unit()) r.push_back(x);
  return r;
}

std::vector<Word> domain_words(const PartialGroup& g, std::size_t max_len) {
  // Prefixes of domain words are domain words (axiom 1), so the search tree
  // can be pruned at the first non-member prefix.
  std::vector<Word> out;
  out.push_back({});
  std::vector<Word> frontier = {{}};
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (ElementId x = 0; x < static_cast<ElementId>(g.size()); ++x) {
        Word c = w;
        c.push_back(x);
        if (g.in_domain(c)) {
          out.push_back(c);
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_word_instances(const PartialGroup& g, const Word& w, ValidationReport& rep) {
  auto pw = g.try_product(w);
  if (!pw) return;
  // axiom 1: both halves of any split are in D
  for (std::size_t k = 1; k + 1 <= w.size(); ++k) {
    Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    Word v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    if (!g.in_domain(u))
      rep.violations.push_back({1, w, "left factor " + g.word_to_string(u) + " not in domain"});
    if (!g.in_domain(v))
      rep.violations.push_back({1, w, "right factor " + g.word_to_string(v) + " not in domain"});
  }
  // axiom 3: replacing an inner segment by its product preserves membership
  // and the product
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 2; j <= w.size(); ++j) {
      Word seg(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
      auto ps = g.try_product(seg);
      if (!ps) continue;  // reported by the axiom 1 sweep
      Word sub(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      sub.push_back(*ps);
      sub.insert(sub.end(), w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
      auto pr = g.try_product(sub);
      if (!pr)
        rep.violations.push_back({3, w, "contraction " + g.word_to_string(sub) + " not in domain"});
      else if (*pr != *pw)
        rep.violations.push_back({3, w,
                                  "contraction " + g.word_to_string(sub) + " has product " +
                                      g.name(*pr) + " != " + g.name(*pw)});
    }
  }
  // axiom 4: i(w) o w is in D with unit product
  Word pad = concat(invert_word(g, w), w);
  auto pp = g.try_product(pad);
  if (!pp)
    rep.violations.push_back({4, w, "padding " + g.word_to_string(pad) + " not in domain"});
  else if (*pp != g.unit())
    rep.violations.push_back({4, w, "padding has product " + g.name(*pp) + " != unit"});
}

void check_basics(const PartialGroup& g, ValidationReport& rep) {
  auto pe = g.try_product({});
  if (!pe || *pe != g.unit())
    rep.violations.push_back({2, {}, "empty word product is not the unit"});
  for (ElementId x = 0; x < static_cast<ElementId>(g.size()); ++x) {
    auto p = g.try_product({x});
    if (!p)
      rep.violations.push_back({1, {x}, "singleton not in domain"});
    else if (*p != x)
      rep.violations.push_back({2, {x}, "singleton product " + g.name(*p) + " != " + g.name(x)});
  }
}

void validate_full(const PartialGroup& g, const std::vector<ElementId>& mul,
                   ValidationReport& rep) {
  auto n = static_cast<ElementId>(g.size());
  auto at = [&](ElementId a, ElementId b) {
    return mul[static_cast<std::size_t>(a) * g.size() + static_cast<std::size_t>(b)];
  };
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (!g.valid_id(at(x, y))) {
        rep.violations.push_back({0, {x, y}, "product table entry out of range"});
        return;
      }
  for (ElementId x = 0; x < n; ++x) {
    if (at(g.unit(), x) != x)
      rep.violations.push_back({3, {g.unit(), x}, "unit is not a left identity"});
    if (at(x, g.unit()) != x)
      rep.violations.push_back({3, {x, g.unit()}, "unit is not a right identity"});
    if (at(x, g.inv(x)) != g.unit() || at(g.inv(x), x) != g.unit())
      rep.violations.push_back({4, {x}, "inverse law fails"});
  }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          rep.violations.push_back({3, {x, y, z}, "associativity fails"});
  rep.checked_len = 3;
}

void validate_table(const PartialGroup& g,
                    const std::vector<std::pair<Word, ElementId>>& entries,
                    ValidationReport& rep) {
  std::size_t max_len = 1;
  for (const auto& [w, p] : entries) {
    max_len = std::max(max_len, w.size());
    bool ok = true;
    for (ElementId x : w) ok = ok && g.valid_id(x);
    if (!ok || !g.valid_id(p)) {
      rep.violations.push_back({0, w, "table entry with invalid id"});
      continue;
    }
    if (w.size() == 1 && p != w[0])
      rep.violations.push_back({2, w, "singleton table entry with wrong product"});
    if (w.empty() && p != g.unit())
      rep.violations.push_back({2, w, "empty-word table entry with wrong product"});
  }
  // words equal up to unit insertion must agree on the product
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i].second != entries[j].second &&
          strip_units(g, entries[i].first) == strip_units(g, entries[j].first))
        rep.violations.push_back({3, entries[i].first,
                                  "conflicting product with " + g.word_to_string(entries[j].first)});
  check_basics(g, rep);
  // padding sweeps stay within the table's own length horizon, matching the
  // scale at which saturation explores them
  for (const auto& [w, p] : entries) {
    check_word_instances(g, w, rep);
    if (2 * w.size() <= max_len) check_word_instances(g, concat(invert_word(g, w), w), rep);
  }
  rep.checked_len = max_len;
}

// Largest length L with size^L not exceeding the sweep budget.
std::size_t affordable_len(std::size_t carrier, std::size_t cap, std::size_t budget = 2000000) {
  std::size_t len = 0, total = 1;
  while (len < cap) {
    if (total > budget / std::max<std::size_t>(carrier, 1)) break;
    total *= std::max<std::size_t>(carrier, 1);
    ++len;
  }
  return len;
}

void validate_enumerated(const PartialGroup& g, std::size_t max_len, ValidationReport& rep) {
  check_basics(g, rep);
  // full enumeration, no membership pruning: axiom 1 failures must surface
  Word w;
  auto rec = [&](auto&& self, std::size_t remaining) -> void {
    if (!w.empty()) check_word_instances(g, w, rep);
    if (remaining == 0) return;
    for (ElementId x = 0; x < static_cast<ElementId>(g.size()); ++x) {
      w.push_back(x);
      self(self, remaining - 1);
      w.pop_back();
    }
  };
  rec(rec, max_len);
  rep.checked_len = max_len;
}

}  // namespace

ValidationReport validate_axioms(const PartialGroup& g, ValidationMode mode, std::size_t max_len) {
  ValidationReport rep;
  const DomainNode& dom = g.domain();
  if (mode == ValidationMode::Exhaustive) {
    if (dom.is_oracle())
      throw UnsupportedModeError("exhaustive validation is unsupported for oracle domains");
    if (const auto* mul = full_table(dom)) {
      validate_full(g, *mul, rep);
      return rep;
    }
    if (const auto* entries = table_entries(dom)) {
      validate_table(g, *entries, rep);
      return rep;
    }
    std::size_t horizon = dom.natural_horizon(g);
    std::size_t len = affordable_len(g.size(), horizon == SIZE_MAX ? 5 : horizon);
    validate_enumerated(g, std::max<std::size_t>(len, 2), rep);
    return rep;
  }
  std::size_t len = affordable_len(g.size(), max_len, 6500000);
  validate_enumerated(g, len, rep);
  return rep;
}

std::string report_to_string(const PartialGroup& g, const ValidationReport& r) {
  std::ostringstream os;
  if (r.ok()) {
    os << "ok (checked up to length " << r.checked_len << ")";
    return os.str();
  }
  for (const auto& v : r.violations) {
    os << "axiom " << v.axiom << " violated at " << g.word_to_string(v.witness) << ": " << v.detail
       << "\n";
  }
  return os.str();
}

}  // namespace pg
