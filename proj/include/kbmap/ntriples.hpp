#pragma once

#include <string>
#include <string_view>

#include "kbmap/term.hpp"

namespace kbmap {

class NtParseError : public Error {
 public:
  NtParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line(line) {}
  std::size_t line;
};

// Parses W3C N-Triples. Comments (#) and blank lines allowed; duplicates collapse.
Graph parse_ntriples(std::string_view text);

// Canonical serialization: one line per triple, sorted lexicographically by rendered
// (subject, predicate, object). Round-trips through parse_ntriples.
std::string serialize_ntriples(const Graph& g);

std::string render_term_nt(const Term& t);

Graph load_ntriples_file(const std::string& path);
void save_ntriples_file(const Graph& g, const std::string& path);

}  // namespace kbmap
