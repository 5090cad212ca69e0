#include "pg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pg {

namespace {

struct Line {
  int number;
  std::string key;
  std::vector<std::string> tokens;  // tokens after "key:"
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    Line line{number, {}, {}};
    if (toks[0].back() == ':') {
      line.key = toks[0].substr(0, toks[0].size() - 1);
      line.tokens.assign(toks.begin() + 1, toks.end());
    } else {
      line.key = toks[0];
      line.tokens.assign(toks.begin() + 1, toks.end());
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::pair<std::string, std::string> split_pair(const Line& l, const std::string& tok) {
  auto colon = tok.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
    throw ParseError(l.number, "expected name:name pair, got '" + tok + "'");
  return {tok.substr(0, colon), tok.substr(colon + 1)};
}

std::string dir_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string() : path.substr(0, slash + 1);
}

std::string join_path(const std::string& base_dir, const std::string& rel) {
  if (!rel.empty() && rel[0] == '/') return rel;
  return base_dir + rel;
}

}  // namespace

// ---------------------------------------------------------------------------
// pgroup v1

PGroup parse_pgroup(std::istream& in) {
  auto lines = read_lines(in);
  if (lines.empty() || lines[0].key != "pgroup" || lines[0].tokens != std::vector<std::string>{"v1"})
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'pgroup v1'");

  std::vector<std::string> names;
  std::optional<std::string> unit_name;
  std::vector<std::pair<int, std::pair<std::string, std::string>>> inv_pairs;
  std::string domain_kind = "listed";
  int domain_line = 0;
  std::vector<std::pair<int, Line>> prod_lines;
  std::optional<Line> oracle_line;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.key == "elements") {
      names = l.tokens;
    } else if (l.key == "unit") {
      if (l.tokens.size() != 1) throw ParseError(l.number, "unit section expects one name");
      unit_name = l.tokens[0];
    } else if (l.key == "inv") {
      for (const auto& t : l.tokens) inv_pairs.emplace_back(l.number, split_pair(l, t));
    } else if (l.key == "domain") {
      if (l.tokens.size() != 1 || (l.tokens[0] != "full" && l.tokens[0] != "listed"))
        throw ParseError(l.number, "domain section expects 'full' or 'listed'");
      domain_kind = l.tokens[0];
      domain_line = l.number;
    } else if (l.key == "prod") {
      prod_lines.emplace_back(l.number, l);
    } else if (l.key == "oracle") {
      oracle_line = l;
    } else {
      throw ParseError(l.number, "unknown section '" + l.key + "'");
    }
  }
  if (names.empty()) throw ParseError(1, "missing section 'elements'");
  if (!unit_name) throw ParseError(1, "missing section 'unit'");

  auto id_of = [&](int line, const std::string& n) -> ElementId {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<ElementId>(i);
    throw ParseError(line, "undeclared name '" + n + "'");
  };
  ElementId unit = id_of(1, *unit_name);

  if (oracle_line) {
    const Line& l = *oracle_line;
    if (l.tokens.empty() || l.tokens[0] != "free-pointed")
      throw ParseError(l.number, "unknown oracle kind");
    PointedSet x;
    x.elements.push_back(*unit_name);
    x.basepoint = 0;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) x.elements.push_back(l.tokens[i]);
    FreePartialGroup fp = free_pointed(x);
    if (fp.group->names() != names)
      throw ParseError(l.number, "declared elements do not match the free-pointed carrier");
    return fp.group;
  }

  std::vector<ElementId> inv(names.size(), -1);
  for (const auto& [line, pr] : inv_pairs) {
    ElementId a = id_of(line, pr.first), b = id_of(line, pr.second);
    if ((inv[static_cast<std::size_t>(a)] >= 0 && inv[static_cast<std::size_t>(a)] != b) ||
        (inv[static_cast<std::size_t>(b)] >= 0 && inv[static_cast<std::size_t>(b)] != a))
      throw ParseError(line, "non-involutive inv pair '" + pr.first + ":" + pr.second + "'");
    inv[static_cast<std::size_t>(a)] = b;
    inv[static_cast<std::size_t>(b)] = a;
  }
  if (inv[static_cast<std::size_t>(unit)] < 0) inv[static_cast<std::size_t>(unit)] = unit;
  if (inv[static_cast<std::size_t>(unit)] != unit) throw ParseError(1, "inv(unit) must be the unit");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (inv[i] < 0) throw ParseError(1, "element '" + names[i] + "' not covered by inv");

  std::vector<std::pair<Word, ElementId>> entries;
  for (const auto& [line, l] : prod_lines) {
    auto eq = std::find(l.tokens.begin(), l.tokens.end(), "=");
    if (eq == l.tokens.end() || eq + 1 != l.tokens.end() - 1)
      throw ParseError(line, "prod line must be 'prod: <word> = <name>'");
    Word w;
    for (auto it = l.tokens.begin(); it != eq; ++it) w.push_back(id_of(line, *it));
    if (w.size() < 2) throw ParseError(line, "prod words must have length >= 2");
    ElementId p = id_of(line, l.tokens.back());
    for (const auto& [w2, p2] : entries)
      if (w2 == w && p2 != p)
        throw ParseError(line, "duplicate prod key with conflicting value");
    entries.emplace_back(std::move(w), p);
  }

  if (domain_kind == "full") {
    std::size_t n = names.size();
    std::vector<ElementId> mul(n * n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      mul[i * n + static_cast<std::size_t>(unit)] = static_cast<ElementId>(i);
      mul[static_cast<std::size_t>(unit) * n + i] = static_cast<ElementId>(i);
    }
    std::vector<std::pair<Word, ElementId>> longer;
    for (const auto& [w, p] : entries) {
      if (w.size() != 2) {
        longer.emplace_back(w, p);
        continue;
      }
      auto& cell = mul[static_cast<std::size_t>(w[0]) * n + static_cast<std::size_t>(w[1])];
      if (cell >= 0 && cell != p)
        throw ParseError(domain_line ? domain_line : 1, "duplicate prod key with conflicting value");
      cell = p;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mul[i * n + j] < 0)
          throw ParseError(domain_line ? domain_line : 1,
                           "full domain is missing the product " + names[i] + " " + names[j]);
    PGroup g = make_partial_group(names, unit, inv, full_domain(mul, n));
    for (const auto& [w, p] : longer)
      if (g->product(w) != p)
        throw ParseError(domain_line ? domain_line : 1, "prod line conflicts with the full table");
    return g;
  }
  return make_partial_group(names, unit, inv, table_domain(std::move(entries)));
}

PGroup parse_pgroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_pgroup(in);
}

std::string serialize_pgroup(const PGroup& g, std::size_t max_word_len, bool* truncated) {
  if (truncated) *truncated = false;
  for (const auto& n : g->names())
    if (n.empty() || n.find_first_of(" \t:=#") != std::string::npos)
      throw std::invalid_argument("serialize: name '" + n + "' not representable in the format");
  std::ostringstream os;
  os << "pgroup v1\n";
  os << "elements:";
  for (const auto& n : g->names()) os << " " << n;
  os << "\n";
  os << "unit: " << g->name(g->unit()) << "\n";
  os << "inv:";
  for (ElementId x = 0; x < static_cast<ElementId>(g->size()); ++x) {
    if (x == g->unit() || g->inv(x) < x) continue;
    os << " " << g->name(x) << ":" << g->name(g->inv(x));
  }
  os << "\n";

  auto write_entries = [&](const std::vector<std::pair<Word, ElementId>>& entries) {
    for (const auto& [w, p] : entries) {
      os << "prod:";
      for (ElementId e : w) os << " " << g->name(e);
      os << " = " << g->name(p) << "\n";
    }
  };

  if (const auto* mul = full_table(g->domain())) {
    os << "domain: full\n";
    std::vector<std::pair<Word, ElementId>> entries;
    for (ElementId a = 0; a < static_cast<ElementId>(g->size()); ++a)
      for (ElementId b = 0; b < static_cast<ElementId>(g->size()); ++b)
        if (a != g->unit() && b != g->unit())
          entries.emplace_back(Word{a, b},
                               (*mul)[static_cast<std::size_t>(a) * g->size() +
                                      static_cast<std::size_t>(b)]);
    write_entries(entries);
    return os.str();
  }
  if (const auto* entries = table_entries(g->domain())) {
    os << "domain: listed\n";
    write_entries(*entries);
    return os.str();
  }

  // structural domain: materialize members, skipping words recoverable by
  // unit deletion from a shorter member
  std::size_t horizon = g->domain().natural_horizon(*g);
  std::size_t len = std::min<std::size_t>(horizon == SIZE_MAX ? max_word_len : horizon,
                                          std::max<std::size_t>(max_word_len, 2));
  std::size_t total = 1, lim = 0;
  while (lim < len && total <= 2000000 / std::max<std::size_t>(g->size(), 1)) {
    total *= std::max<std::size_t>(g->size(), 1);
    ++lim;
  }
  if (truncated && (horizon == SIZE_MAX || lim < horizon)) *truncated = true;
  std::vector<std::pair<Word, ElementId>> entries;
  for (const Word& w : domain_words(*g, lim)) {
    if (w.size() < 2) continue;
    Word s = strip_units(*g, w);
    if (s != w) {
      if (s.size() <= 1) continue;
      auto ps = g->try_product(s);
      if (ps && *ps == g->product(w)) continue;
    }
    entries.emplace_back(w, g->product(w));
  }
  os << "domain: listed\n";
  write_entries(entries);
  return os.str();
}

// ---------------------------------------------------------------------------
// morphism v1

Morphism parse_morphism(std::istream& in, const std::string& base_dir) {
  auto lines = read_lines(in);
  if (lines.empty() || lines[0].key != "morphism" ||
      lines[0].tokens != std::vector<std::string>{"v1"})
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'morphism v1'");
  PGroup source, target;
  std::vector<std::pair<int, std::pair<std::string, std::string>>> map_pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.key == "source" || l.key == "target") {
      if (l.tokens.size() != 1) throw ParseError(l.number, l.key + " expects one path");
      PGroup g = parse_pgroup_file(join_path(base_dir, l.tokens[0]));
      (l.key == "source" ? source : target) = std::move(g);
    } else if (l.key == "map") {
      for (const auto& t : l.tokens) map_pairs.emplace_back(l.number, split_pair(l, t));
    } else {
      throw ParseError(l.number, "unknown section '" + l.key + "'");
    }
  }
  if (!source) throw ParseError(1, "missing section 'source'");
  if (!target) throw ParseError(1, "missing section 'target'");
  std::vector<ElementId> map(source->size(), -1);
  for (const auto& [line, pr] : map_pairs) {
    auto a = source->find(pr.first);
    auto b = target->find(pr.second);
    if (!a) throw ParseError(line, "undeclared source name '" + pr.first + "'");
    if (!b) throw ParseError(line, "undeclared target name '" + pr.second + "'");
    map[static_cast<std::size_t>(*a)] = *b;
  }
  if (map[static_cast<std::size_t>(source->unit())] < 0)
    map[static_cast<std::size_t>(source->unit())] = target->unit();
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] < 0)
      throw ParseError(1, "map not total: missing image of '" + source->name(static_cast<ElementId>(i)) + "'");
  return Morphism{std::move(source), std::move(target), std::move(map)};
}

Morphism parse_morphism_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_morphism(in, dir_of(path));
}

std::string serialize_morphism(const Morphism& m, const std::string& source_path,
                               const std::string& target_path) {
  std::ostringstream os;
  os << "morphism v1\n";
  os << "source: " << source_path << "\n";
  os << "target: " << target_path << "\n";
  os << "map:";
  for (ElementId x = 0; x < static_cast<ElementId>(m.source->size()); ++x)
    os << " " << m.source->name(x) << ":" << m.target->name(m.apply(x));
  os << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// diagram v1

Diagram parse_diagram(std::istream& in, const std::string& base_dir) {
  auto lines = read_lines(in);
  if (lines.empty() || lines[0].key != "diagram" ||
      lines[0].tokens != std::vector<std::string>{"v1"})
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'diagram v1'");
  Diagram d;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.key == "object") {
      if (l.tokens.size() != 1) throw ParseError(l.number, "object expects one path");
      d.objects.push_back(parse_pgroup_file(join_path(base_dir, l.tokens[0])));
    } else if (l.key == "arrow") {
      if (l.tokens.size() < 2) throw ParseError(l.number, "arrow expects: <src> <tgt> <pairs...>");
      std::size_t src, tgt;
      try {
        src = std::stoul(l.tokens[0]);
        tgt = std::stoul(l.tokens[1]);
      } catch (const std::exception&) {
        throw ParseError(l.number, "arrow indices must be numbers");
      }
      if (src >= d.objects.size() || tgt >= d.objects.size())
        throw ParseError(l.number, "arrow index out of range (objects must precede arrows)");
      const PGroup& s = d.objects[src];
      const PGroup& t = d.objects[tgt];
      std::vector<ElementId> map(s->size(), -1);
      for (std::size_t k = 2; k < l.tokens.size(); ++k) {
        auto pr = split_pair(l, l.tokens[k]);
        auto a = s->find(pr.first);
        auto b = t->find(pr.second);
        if (!a) throw ParseError(l.number, "undeclared source name '" + pr.first + "'");
        if (!b) throw ParseError(l.number, "undeclared target name '" + pr.second + "'");
        map[static_cast<std::size_t>(*a)] = *b;
      }
      if (map[static_cast<std::size_t>(s->unit())] < 0)
        map[static_cast<std::size_t>(s->unit())] = t->unit();
      for (std::size_t k = 0; k < map.size(); ++k)
        if (map[k] < 0)
          throw ParseError(l.number,
                           "map not total: missing image of '" + s->name(static_cast<ElementId>(k)) + "'");
      d.arrows.push_back({src, tgt, Morphism{s, t, std::move(map)}});
    } else {
      throw ParseError(l.number, "unknown section '" + l.key + "'");
    }
  }
  return d;
}

Diagram parse_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_diagram(in, dir_of(path));
}

std::string serialize_diagram(const Diagram& d, const std::vector<std::string>& object_paths) {
  if (object_paths.size() != d.objects.size())
    throw std::invalid_argument("serialize_diagram: one path per object required");
  std::ostringstream os;
  os << "diagram v1\n";
  for (const auto& p : object_paths) os << "object: " << p << "\n";
  for (const auto& a : d.arrows) {
    os << "arrow: " << a.source << " " << a.target;
    const PartialGroup& s = *d.objects[a.source];
    const PartialGroup& t = *d.objects[a.target];
    for (ElementId x = 0; x < static_cast<ElementId>(s.size()); ++x)
      os << " " << s.name(x) << ":" << t.name(a.morphism.apply(x));
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// sets v1

SetSObject parse_sets(std::istream& in) {
  auto lines = read_lines(in);
  if (lines.empty() || lines[0].key != "sets" || lines[0].tokens != std::vector<std::string>{"v1"})
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'sets v1'");
  SetSObject x;
  std::vector<std::pair<int, std::pair<std::string, std::string>>> inv_pairs;
  std::vector<std::pair<int, std::vector<std::string>>> word_lines;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.key == "elements") {
      x.elements = l.tokens;
    } else if (l.key == "inv") {
      for (const auto& t : l.tokens) inv_pairs.emplace_back(l.number, split_pair(l, t));
    } else if (l.key == "word") {
      word_lines.emplace_back(l.number, l.tokens);
    } else {
      throw ParseError(l.number, "unknown section '" + l.key + "'");
    }
  }
  if (x.elements.empty()) throw ParseError(1, "missing section 'elements'");
  auto id_of = [&](int line, const std::string& n) -> ElementId {
    for (std::size_t i = 0; i < x.elements.size(); ++i)
      if (x.elements[i] == n) return static_cast<ElementId>(i);
    throw ParseError(line, "undeclared name '" + n + "'");
  };
  x.involution.assign(x.elements.size(), -1);
  for (const auto& [line, pr] : inv_pairs) {
    ElementId a = id_of(line, pr.first), b = id_of(line, pr.second);
    x.involution[static_cast<std::size_t>(a)] = b;
    x.involution[static_cast<std::size_t>(b)] = a;
  }
  for (std::size_t i = 0; i < x.involution.size(); ++i)
    if (x.involution[i] < 0) x.involution[i] = static_cast<ElementId>(i);
  for (const auto& [line, toks] : word_lines) {
    Word w;
    for (const auto& t : toks) w.push_back(id_of(line, t));
    x.marked_words.push_back(std::move(w));
  }
  return x;
}

SetSObject parse_sets_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_sets(in);
}

std::string serialize_sets(const SetSObject& x) {
  std::ostringstream os;
  os << "sets v1\n";
  os << "elements:";
  for (const auto& n : x.elements) os << " " << n;
  os << "\n";
  os << "inv:";
  for (ElementId e = 0; e < static_cast<ElementId>(x.elements.size()); ++e)
    if (x.involution[static_cast<std::size_t>(e)] > e)
      os << " " << x.elements[static_cast<std::size_t>(e)] << ":"
         << x.elements[static_cast<std::size_t>(x.involution[static_cast<std::size_t>(e)])];
  os << "\n";
  for (const Word& w : x.marked_words) {
    os << "word:";
    for (ElementId e : w) os << " " << x.elements[static_cast<std::size_t>(e)];
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// relations v1

std::vector<std::vector<std::string>> parse_relations(std::istream& in) {
  auto lines = read_lines(in);
  if (lines.empty() || lines[0].key != "relations" ||
      lines[0].tokens != std::vector<std::string>{"v1"})
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'relations v1'");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.key != "word") throw ParseError(l.number, "unknown section '" + l.key + "'");
    out.push_back(l.tokens);
  }
  return out;
}

std::vector<std::vector<std::string>> parse_relations_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_relations(in);
}

std::string serialize_relations(const PartialGroup& g, const std::vector<Word>& words) {
  std::ostringstream os;
  os << "relations v1\n";
  for (const Word& w : words) {
    os << "word:";
    for (ElementId e : w) os << " " << g.name(e);
    os << "\n";
  }
  return os.str();
}

std::vector<Word> resolve_words(const PartialGroup& g,
                                const std::vector<std::vector<std::string>>& words) {
  std::vector<Word> out;
  for (const auto& toks : words) {
    Word w;
    for (const auto& t : toks) {
      auto id = g.find(t);
      if (!id) throw std::invalid_argument("unknown element name '" + t + "'");
      w.push_back(*id);
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace pg
