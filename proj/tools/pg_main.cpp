// Command-line driver: construct, validate and combine finite partial groups
// stored in the pgroup/morphism/diagram/sets/relations file formats.
//
// Exit codes: 0 success with no violations, 1 violations or a negative
// answer, 2 usage or parse errors.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pg/free.hpp"
#include "pg/groups.hpp"
#include "pg/io.hpp"
#include "pg/limits.hpp"
#include "pg/quotient.hpp"

using nlohmann::json;
using namespace pg;

namespace {

struct Options {
  std::string out;
  std::size_t max_word_len = 8;
  std::size_t max_elements = 512;
  std::string mode = "exhaustive";
  bool as_json = false;
};

json violations_json(const PartialGroup& g, const ValidationReport& rep) {
  json arr = json::array();
  for (const auto& v : rep.violations)
    arr.push_back(
        {{"axiom", v.axiom}, {"witness", g.word_to_string(v.witness)}, {"detail", v.detail}});
  return arr;
}

int emit(const Options& opt, const std::string& command, const json& inputs, json result,
         const json& violations, bool truncated) {
  int code = violations.empty() ? 0 : 1;
  if (opt.as_json) {
    json out = {{"command", command},
                {"inputs", inputs},
                {"result", std::move(result)},
                {"violations", violations},
                {"truncated", truncated}};
    std::cout << out.dump(2) << "\n";
  }
  return code;
}

void write_pgroup(const Options& opt, const PGroup& g, bool* truncated) {
  if (opt.out.empty()) return;
  std::ofstream f(opt.out);
  if (!f) throw std::runtime_error("cannot write " + opt.out);
  f << serialize_pgroup(g, opt.max_word_len, truncated);
}

SubgroupWitness subgroup_from_relations(const PGroup& g, const std::string& rel_path) {
  auto words = resolve_words(*g, parse_relations_file(rel_path));
  std::vector<ElementId> gens;
  for (const Word& w : words) gens.push_back(g->product(w));
  return generated_partial_subgroup(g, gens);
}

const char* verdict_name(PresentationVerdict v) {
  switch (v) {
    case PresentationVerdict::Verified:
      return "verified";
    case PresentationVerdict::BoundedVerified:
      return "bounded-verified";
    default:
      return "inconclusive";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"finite partial groups: construction, validation, limits and colimits"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--out", opt.out, "write the resulting partial group to this path");
  app.add_option("--max-word-len", opt.max_word_len, "word length bound for sampling/saturation");
  app.add_option("--max-elements", opt.max_elements, "carrier bound for saturation");
  app.add_option("--mode", opt.mode, "validation mode: exhaustive or sampled");
  app.add_flag("--json", opt.as_json, "emit a machine-readable report");

  std::string file_a, file_b;
  std::vector<std::string> names;
  std::vector<std::string> files;

  auto* validate = app.add_subcommand("validate", "check the defining axioms");
  validate->add_option("pgroup", file_a)->required();

  auto* product = app.add_subcommand("product", "multiply a word of elements");
  product->add_option("pgroup", file_a)->required();
  product->add_option("word", names, "element names");

  auto* coprod = app.add_subcommand("coproduct", "coproduct of partial groups");
  coprod->add_option("pgroups", files)->required();

  auto* equalize = app.add_subcommand("equalize", "equalizer of a parallel pair");
  equalize->add_option("morphism_f", file_a)->required();
  equalize->add_option("morphism_g", file_b)->required();

  auto* coequalize = app.add_subcommand("coequalize", "coequalizer of a parallel pair");
  coequalize->add_option("morphism_f", file_a)->required();
  coequalize->add_option("morphism_g", file_b)->required();

  auto* quot = app.add_subcommand("quotient", "quotient by the subgroup generated by relations");
  quot->add_option("pgroup", file_a)->required();
  quot->add_option("relations", file_b)->required();

  auto* limit = app.add_subcommand("limit", "limit of a finite diagram");
  limit->add_option("diagram", file_a)->required();

  auto* colimit = app.add_subcommand("colimit", "colimit of a finite diagram");
  colimit->add_option("diagram", file_a)->required();

  auto* freep = app.add_subcommand("free-pointed", "free partial group over a pointed set");
  freep->add_option("generators", names, "non-basepoint generator names")->required();

  auto* frees = app.add_subcommand("free-sets", "free partial group over a sets-with-words object");
  frees->add_option("sets", file_a)->required();

  auto* checkm = app.add_subcommand("check-morphism", "verify a morphism file");
  checkm->add_option("morphism", file_a)->required();

  auto* iso = app.add_subcommand("iso", "search for an isomorphism between two partial groups");
  iso->add_option("pgroup_a", file_a)->required();
  iso->add_option("pgroup_b", file_b)->required();

  auto* classify = app.add_subcommand("classify", "classify the subset of relation products");
  classify->add_option("pgroup", file_a)->required();
  classify->add_option("relations", file_b)->required();

  auto* gensub =
      app.add_subcommand("generate-sub", "generated partial subgroup of relation products");
  gensub->add_option("pgroup", file_a)->required();
  gensub->add_option("relations", file_b)->required();

  auto* present =
      app.add_subcommand("present-free", "present as a quotient of a free partial group");
  present->add_option("pgroup", file_a)->required();

  auto* addrel = app.add_subcommand("add-relations", "freely add relation words to the domain");
  addrel->add_option("pgroup", file_a)->required();
  addrel->add_option("relations", file_b)->required();

  auto* demo =
      app.add_subcommand("paper-demo", "replay the free-pointed/Klein coequalizer computation");

  // options like --out and --mode may follow the subcommand
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit with 2, --help with 0
  }

  if (*validate) {
    PGroup g = parse_pgroup_file(file_a);
    if (opt.mode != "sampled" && opt.mode != "exhaustive")
      throw CLI::ValidationError("--mode must be exhaustive or sampled");
    ValidationMode mode =
        opt.mode == "sampled" ? ValidationMode::Sampled : ValidationMode::Exhaustive;
    ValidationReport rep = validate_axioms(*g, mode, opt.max_word_len);
    std::cout << report_to_string(*g, rep) << "\n";
    return emit(opt, "validate", {file_a}, {{"checked_len", rep.checked_len}},
                violations_json(*g, rep), false);
  }
  if (*product) {
    PGroup g = parse_pgroup_file(file_a);
    Word w = resolve_words(*g, {names}).front();
    auto p = g->try_product(w);
    if (!p) {
      std::cout << "word " << g->word_to_string(w) << " is not in the domain\n";
      return emit(
          opt, "product", {file_a}, {{"in_domain", false}},
          json::array(
              {{{"axiom", 0}, {"witness", g->word_to_string(w)}, {"detail", "not in domain"}}}),
          false);
    }
    std::cout << g->name(*p) << "\n";
    return emit(opt, "product", {file_a}, {{"in_domain", true}, {"product", g->name(*p)}},
                json::array(), false);
  }
  if (*coprod) {
    std::vector<PGroup> summands;
    for (const auto& f : files) summands.push_back(parse_pgroup_file(f));
    Coproduct cp = coproduct(summands);
    bool truncated = false;
    write_pgroup(opt, cp.group, &truncated);
    std::cout << "coproduct carrier size " << cp.group->size() << "\n";
    return emit(opt, "coproduct", files, {{"size", cp.group->size()}}, json::array(), truncated);
  }
  if (*equalize) {
    Morphism f = parse_morphism_file(file_a), g = parse_morphism_file(file_b);
    Equalizer eq = equalizer(f, g);
    bool truncated = false;
    write_pgroup(opt, eq.subgroup.sub, &truncated);
    std::cout << "equalizer carrier size " << eq.subgroup.sub->size() << ":";
    for (ElementId x : eq.subgroup.subset) std::cout << " " << f.source->name(x);
    std::cout << "\n";
    return emit(opt, "equalize", {file_a, file_b}, {{"size", eq.subgroup.sub->size()}},
                json::array(), truncated);
  }
  if (*coequalize) {
    Morphism f = parse_morphism_file(file_a), g = parse_morphism_file(file_b);
    Quotient q = coequalizer(f, g);
    bool truncated = false;
    write_pgroup(opt, q.group, &truncated);
    std::cout << "coequalizer carrier size " << q.group->size() << "\n";
    return emit(opt, "coequalize", {file_a, file_b}, {{"size", q.group->size()}}, json::array(),
                truncated);
  }
  if (*quot) {
    PGroup g = parse_pgroup_file(file_a);
    SubgroupWitness h = subgroup_from_relations(g, file_b);
    Quotient q = quotient(g, h);
    bool truncated = false;
    write_pgroup(opt, q.group, &truncated);
    std::cout << "quotient carrier size " << q.group->size() << "\n";
    return emit(opt, "quotient", {file_a, file_b}, {{"size", q.group->size()}}, json::array(),
                truncated);
  }
  if (*limit) {
    Diagram d = parse_diagram_file(file_a);
    Limit lim = finite_limit(d);
    bool truncated = false;
    write_pgroup(opt, lim.group, &truncated);
    std::cout << "limit carrier size " << lim.group->size() << "\n";
    return emit(opt, "limit", {file_a}, {{"size", lim.group->size()}}, json::array(), truncated);
  }
  if (*colimit) {
    Diagram d = parse_diagram_file(file_a);
    Colimit c = finite_colimit(d);
    bool truncated = false;
    write_pgroup(opt, c.group, &truncated);
    std::cout << "colimit carrier size " << c.group->size() << "\n";
    return emit(opt, "colimit", {file_a}, {{"size", c.group->size()}}, json::array(), truncated);
  }
  if (*freep) {
    PointedSet x;
    x.elements.push_back("1");
    for (const auto& n : names) x.elements.push_back(n);
    x.basepoint = 0;
    FreePartialGroup fp = free_pointed(x, opt.max_word_len);
    if (!opt.out.empty()) {
      std::ofstream f(opt.out);
      f << "pgroup v1\nelements:";
      for (const auto& n : fp.group->names()) f << " " << n;
      f << "\nunit: 1\ninv:";
      for (ElementId e = 1; e < static_cast<ElementId>(fp.group->size()); e += 2)
        f << " " << fp.group->name(e) << ":" << fp.group->name(fp.group->inv(e));
      f << "\noracle: free-pointed";
      for (const auto& n : names) f << " " << n;
      f << "\n";
    }
    std::cout << "free pointed carrier size " << fp.group->size() << "\n";
    return emit(opt, "free-pointed", names, {{"size", fp.group->size()}}, json::array(), false);
  }
  if (*frees) {
    SetSObject x = parse_sets_file(file_a);
    FreePartialGroup fs = free_sets(x, {opt.max_word_len, opt.max_elements});
    bool truncated = false;
    write_pgroup(opt, fs.group, &truncated);
    std::cout << "free sets carrier size " << fs.group->size()
              << (fs.truncated ? " (truncated)" : " (complete)") << "\n";
    return emit(opt, "free-sets", {file_a},
                {{"size", fs.group->size()}, {"complete", !fs.truncated}}, json::array(),
                fs.truncated || truncated);
  }
  if (*checkm) {
    Morphism m = parse_morphism_file(file_a);
    ValidationReport rep = check_morphism(m, opt.max_word_len);
    std::cout << (rep.ok()
                      ? "morphism (checked up to length " + std::to_string(rep.checked_len) + ")"
                      : report_to_string(*m.source, rep))
              << "\n";
    return emit(opt, "check-morphism", {file_a}, {{"checked_len", rep.checked_len}},
                violations_json(*m.source, rep), false);
  }
  if (*iso) {
    PGroup a = parse_pgroup_file(file_a), b = parse_pgroup_file(file_b);
    auto m = find_isomorphism(a, b);
    if (m) {
      std::cout << "isomorphic:";
      for (ElementId x = 0; x < static_cast<ElementId>(a->size()); ++x)
        std::cout << " " << a->name(x) << ":" << b->name(m->apply(x));
      std::cout << "\n";
      return emit(opt, "iso", {file_a, file_b}, {{"isomorphic", true}}, json::array(), false);
    }
    std::cout << "not isomorphic\n";
    emit(opt, "iso", {file_a, file_b}, {{"isomorphic", false}}, json::array(), false);
    return 1;
  }
  if (*classify) {
    PGroup g = parse_pgroup_file(file_a);
    auto words = resolve_words(*g, parse_relations_file(file_b));
    std::vector<ElementId> subset;
    for (const Word& w : words) subset.push_back(g->product(w));
    SubgroupWitness w = classify_subset(g, subset);
    std::cout << "impartial: " << (w.impartial ? "yes" : "no")
              << "  partial: " << (w.partial ? "yes" : "no")
              << "  partial-normal: " << (w.partial_normal ? "yes" : "no") << "\n";
    return emit(opt, "classify", {file_a, file_b},
                {{"impartial", w.impartial},
                 {"partial", w.partial},
                 {"partial_normal", w.partial_normal}},
                json::array(), false);
  }
  if (*gensub) {
    PGroup g = parse_pgroup_file(file_a);
    SubgroupWitness h = subgroup_from_relations(g, file_b);
    bool truncated = false;
    write_pgroup(opt, h.subgroup.sub, &truncated);
    std::cout << "generated partial subgroup size " << h.subgroup.subset.size() << ":";
    for (ElementId x : h.subgroup.subset) std::cout << " " << g->name(x);
    std::cout << "\n";
    return emit(opt, "generate-sub", {file_a, file_b}, {{"size", h.subgroup.subset.size()}},
                json::array(), truncated);
  }
  if (*present) {
    PGroup g = parse_pgroup_file(file_a);
    PresentationReport rep = present_as_quotient_of_free(g, {opt.max_word_len, opt.max_elements});
    bool truncated = false;
    write_pgroup(opt, rep.quotient_group, &truncated);
    std::cout << "free object size " << rep.free_object.group->size()
              << (rep.free_object.truncated ? " (truncated)" : " (complete)") << ", quotient size "
              << rep.quotient_group->size() << ", verdict " << verdict_name(rep.verdict) << "\n";
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    return emit(opt, "present-free", {file_a},
                {{"free_size", rep.free_object.group->size()},
                 {"quotient_size", rep.quotient_group->size()},
                 {"verdict", verdict_name(rep.verdict)}},
                json::array(), rep.free_object.truncated);
  }
  if (*addrel) {
    PGroup g = parse_pgroup_file(file_a);
    auto words = resolve_words(*g, parse_relations_file(file_b));
    AddRelationsReport rep = add_relations(g, words, {opt.max_word_len, opt.max_elements});
    bool truncated = false;
    write_pgroup(opt, rep.quotient_group, &truncated);
    std::cout << "extended quotient size " << rep.quotient_group->size() << ", embedding "
              << (rep.embedding_verified ? "verified" : "not verified") << "\n";
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    return emit(opt, "add-relations", {file_a, file_b},
                {{"quotient_size", rep.quotient_group->size()},
                 {"embedding_verified", rep.embedding_verified}},
                json::array(), rep.truncated);
  }
  if (*demo) {
    FreePartialGroup fp = free_pointed({{"1", "a", "b"}, 0});
    PGroup k = klein_group();
    ElementId x = *k->find("x"), y = *k->find("y"), xy = *k->find("xy");
    Morphism f = universal_map_pointed(fp, k, {0, x, y});
    Morphism g = universal_map_pointed(fp, k, {0, xy, x});
    auto classes = set_coequalizer_classes(f, g);
    std::cout << "free pointed group on {1,a,b}: carrier size " << fp.group->size() << "\n";
    std::cout << "induced maps into the Klein group: f(a)=x f(b)=y, g(a)=xy g(b)=x\n";
    std::cout << "pointed-set coequalizer of (f,g): " << classes.size() << " classes\n";
    ElementId p1 = k->product({f.apply(*fp.group->find("a")), f.apply(*fp.group->find("b"))});
    ElementId p2 = k->product({f.apply(*fp.group->find("a")), g.apply(*fp.group->find("b"))});
    std::cout << "products (af,bf) -> " << k->name(p1) << " and (af,bg) -> " << k->name(p2)
              << ": same set-level word, different products\n";
    Quotient q = coequalizer(f, g);
    std::cout << "coequalizer in Part: carrier size " << q.group->size() << "\n";
    return emit(opt, "paper-demo", json::array(),
                {{"set_classes", classes.size()}, {"part_coequalizer_size", q.group->size()}},
                json::array(), false);
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
