#include "kbmap/kb.hpp"

#include <algorithm>
#include <vector>

#include "kbmap/ntriples.hpp"

namespace kbmap {

namespace {

bool isSchemaPredicate(const std::string& pred) {
  return pred == vocab::kRdfsDomain || pred == vocab::kRdfsRange ||
         pred == vocab::kRdfsSubClassOf || pred == vocab::kOwlEquivalentClass ||
         pred == vocab::kOwlEquivalentProperty;
}

bool isSchemaTypeObject(const std::string& obj) {
  return obj == vocab::kOwlClass || obj == vocab::kRdfsClass ||
         obj == vocab::kOwlDatatypeProperty || obj == vocab::kOwlObjectProperty ||
         obj == vocab::kRdfProperty;
}

}  // namespace

Kb kb_from_graph(const Graph& g) {
  Kb kb;
  kb.schema = extract_schema(g);
  kb.instances.prefixes = g.prefixes;
  for (const auto& t : g.triples) {
    const std::string& pred = t.predicate.value;
    if (isSchemaPredicate(pred)) continue;
    if (pred == vocab::kRdfType && t.object.isIri() && isSchemaTypeObject(t.object.value)) continue;
    if (pred == vocab::kRdfType && t.object.isIri()) {
      if (!kb.schema.isConcept(t.object.value))
        throw Error("instance typed with unknown concept: " + t.object.value);
    }
    kb.instances.insert(t);
  }
  return kb;
}

Kb load_kb_file(const std::string& path) { return kb_from_graph(load_ntriples_file(path)); }

Graph kb_to_graph(const Kb& kb) {
  Graph g = schema_to_graph(kb.schema);
  g.prefixes = kb.instances.prefixes;
  for (const auto& t : kb.instances.triples) g.insert(t);
  return g;
}

std::string most_specific_type(const Kb& kb, const std::string& individual) {
  const Term subj = Term::iri(individual);
  std::vector<std::string> types;
  for (const auto& t : kb.instances.triples) {
    if (t.subject == subj && t.predicate.value == vocab::kRdfType && t.object.isIri())
      types.push_back(t.object.value);
  }
  if (types.empty()) throw Error("no rdf:type assertion for " + individual);

  // Keep the types with no asserted proper subtype.
  std::vector<std::string> minimal;
  for (const auto& a : types) {
    bool hasSub = false;
    for (const auto& b : types) {
      if (a != b && kb.schema.subclassOf(b, a)) {
        hasSub = true;
        break;
      }
    }
    if (!hasSub) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end());
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  if (minimal.size() != 1) {
    std::string msg = "individual " + individual + " has more than one most-specific type:";
    for (const auto& m : minimal) msg += " " + m;
    throw Error(msg);
  }
  return minimal.front();
}

}  // namespace kbmap
