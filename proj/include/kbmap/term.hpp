#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace kbmap {

// Common vocabulary IRIs.
namespace vocab {
inline constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* kRdfProperty = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
inline constexpr const char* kRdfsDomain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr const char* kRdfsRange = "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr const char* kRdfsSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr const char* kRdfsClass = "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr const char* kRdfsLiteral = "http://www.w3.org/2000/01/rdf-schema#Literal";
inline constexpr const char* kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr const char* kOwlClass = "http://www.w3.org/2002/07/owl#Class";
inline constexpr const char* kOwlDatatypeProperty = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr const char* kOwlObjectProperty = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr const char* kOwlEquivalentClass = "http://www.w3.org/2002/07/owl#equivalentClass";
inline constexpr const char* kOwlEquivalentProperty = "http://www.w3.org/2002/07/owl#equivalentProperty";
inline constexpr const char* kXsdPrefix = "http://www.w3.org/2001/XMLSchema#";
inline constexpr const char* kXsdString = "http://www.w3.org/2001/XMLSchema#string";
}  // namespace vocab

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

enum class TermKind { Iri, Blank, Literal };

// An RDF term: IRI, blank node, or literal (lexical form + optional datatype/lang).
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;     // IRI string, blank node label, or literal lexical form
  std::string datatype;  // literals only; empty means plain
  std::string lang;      // literals only

  static Term iri(std::string v);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = "", std::string lang = "");

  bool isIri() const { return kind == TermKind::Iri; }
  bool isBlank() const { return kind == TermKind::Blank; }
  bool isLiteral() const { return kind == TermKind::Literal; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

struct Triple {
  Term subject;    // Iri or Blank
  Term predicate;  // always Iri
  Term object;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

// Set of triples plus a display-only prefix table.
struct Graph {
  std::set<Triple> triples;
  std::map<std::string, std::string> prefixes;  // short prefix -> IRI base

  void insert(Triple t) { triples.insert(std::move(t)); }
  void insert(Term s, Term p, Term o) { triples.insert({std::move(s), std::move(p), std::move(o)}); }
  bool contains(const Triple& t) const { return triples.count(t) > 0; }
  std::size_t size() const { return triples.size(); }
  bool empty() const { return triples.empty(); }

  bool operator==(const Graph& other) const { return triples == other.triples; }
};

// Local name of an IRI (text after the last '#' or '/'), used for display and variable names.
std::string local_name(const std::string& iri);

// Compress an IRI with a prefix table; returns e.g. "src:Person" or "<full-iri>".
std::string compact_iri(const std::string& iri, const std::map<std::string, std::string>& prefixes);

}  // namespace kbmap
