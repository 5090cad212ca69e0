#pragma once

#include <iosfwd>

#include "pg/colimits.hpp"
#include "pg/free.hpp"

// Line-based file formats. `#` starts a comment; parse errors carry the line
// number and offending token.

namespace pg {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// pgroup v1
//   elements: <name...>
//   unit: <name>
//   inv: <a>:<b> ...                  every element covered
//   domain: full | listed             optional, default listed
//   prod: <name...> = <name>          words of length >= 2; singletons and
//                                     the empty word are implicit
//   oracle: free-pointed <gen...>     alternative to domain/prod sections
PGroup parse_pgroup(std::istream& in);
PGroup parse_pgroup_file(const std::string& path);

// Serializes full- and table-domain groups exactly. Domains without a finite
// table (oracle-free-pointed excepted) are materialized up to max_word_len;
// *truncated reports whether that lost anything known to be beyond the bound.
std::string serialize_pgroup(const PGroup& g, std::size_t max_word_len = 8,
                             bool* truncated = nullptr);

// morphism v1
//   source: <path>
//   target: <path>
//   map: <a>:<x> ...                  unit may be omitted
Morphism parse_morphism(std::istream& in, const std::string& base_dir);
Morphism parse_morphism_file(const std::string& path);
std::string serialize_morphism(const Morphism& m, const std::string& source_path,
                               const std::string& target_path);

// diagram v1
//   object: <path>
//   arrow: <src-index> <tgt-index> <a>:<x> ...
Diagram parse_diagram(std::istream& in, const std::string& base_dir);
Diagram parse_diagram_file(const std::string& path);
std::string serialize_diagram(const Diagram& d, const std::vector<std::string>& object_paths);

// sets v1
//   elements: <name...>
//   inv: <a>:<b> ...
//   word: <name...>                   the marked words S_X; may repeat
SetSObject parse_sets(std::istream& in);
SetSObject parse_sets_file(const std::string& path);
std::string serialize_sets(const SetSObject& x);

// relations v1
//   word: <name...>                   words over a partial group's carrier
std::vector<std::vector<std::string>> parse_relations(std::istream& in);
std::vector<std::vector<std::string>> parse_relations_file(const std::string& path);
std::string serialize_relations(const PartialGroup& g, const std::vector<Word>& words);

// Resolves relation words against a carrier; throws ParseError-style
// invalid_argument on unknown names.
std::vector<Word> resolve_words(const PartialGroup& g,
                                const std::vector<std::vector<std::string>>& words);

}  // namespace pg
