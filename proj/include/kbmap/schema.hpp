#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kbmap/term.hpp"

namespace kbmap {

struct ObjectPropertyDecl {
  std::string domain;
  std::string range;
  auto operator<=>(const ObjectPropertyDecl&) const = default;
};

// The RDFS layer of a KB: concepts, attributes (datatype properties), object
// properties, and the subclass hierarchy. Equivalence links are kept for
// fragment selection.
struct Schema {
  std::set<std::string> concepts;
  std::map<std::string, std::string> attributes;  // attribute IRI -> domain concept
  std::map<std::string, ObjectPropertyDecl> objectProperties;
  std::set<std::pair<std::string, std::string>> subclassEdges;  // (child, parent)
  std::map<std::string, std::set<std::string>> equivalents;     // symmetric closure

  bool isConcept(const std::string& iri) const { return concepts.count(iri) > 0; }
  bool isAttribute(const std::string& iri) const { return attributes.count(iri) > 0; }
  bool isObjectProperty(const std::string& iri) const { return objectProperties.count(iri) > 0; }

  // Direct parents of a concept.
  std::vector<std::string> parentsOf(const std::string& concept_) const;
  // Reflexive-transitive superclass set.
  std::set<std::string> superclassesOf(const std::string& concept_) const;
  // True iff a is b or a transitive subclass of b.
  bool subclassOf(const std::string& a, const std::string& b) const;

  // Attributes whose domain is exactly `concept_`, sorted.
  std::vector<std::string> attributesOf(const std::string& concept_) const;

  bool operator==(const Schema&) const = default;
};

// Extracts the schema from schema-level triples. A property is an attribute iff it
// is declared a datatype property or its range is a literal datatype; otherwise it
// is an object property and must have concept-valued domain and range.
// Throws Error on missing domain/range or a subclass cycle.
Schema extract_schema(const Graph& g);

// Renders a Schema back to schema triples (inverse of extract_schema up to typing
// declaration normalization).
Graph schema_to_graph(const Schema& s);

}  // namespace kbmap
