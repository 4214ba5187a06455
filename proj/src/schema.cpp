#include "kbmap/schema.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace kbmap {

namespace {

bool isLiteralDatatype(const std::string& iri) {
  return iri == vocab::kRdfsLiteral || iri.rfind(vocab::kXsdPrefix, 0) == 0;
}

void checkAcyclic(const std::set<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, std::vector<std::string>> adj;
  std::set<std::string> nodes;
  for (const auto& [c, p] : edges) {
    adj[c].push_back(p);
    nodes.insert(c);
    nodes.insert(p);
  }
  std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
  std::function<void(const std::string&)> dfs = [&](const std::string& n) {
    state[n] = 1;
    for (const auto& m : adj[n]) {
      if (state[m] == 1) throw Error("subclass cycle detected at " + m);
      if (state[m] == 0) dfs(m);
    }
    state[n] = 2;
  };
  for (const auto& n : nodes)
    if (state[n] == 0) dfs(n);
}

}  // namespace

std::vector<std::string> Schema::parentsOf(const std::string& concept_) const {
  std::vector<std::string> out;
  for (const auto& [c, p] : subclassEdges)
    if (c == concept_) out.push_back(p);
  return out;
}

std::set<std::string> Schema::superclassesOf(const std::string& concept_) const {
  std::set<std::string> seen{concept_};
  std::deque<std::string> todo{concept_};
  while (!todo.empty()) {
    std::string cur = todo.front();
    todo.pop_front();
    for (const auto& p : parentsOf(cur))
      if (seen.insert(p).second) todo.push_back(p);
  }
  return seen;
}

bool Schema::subclassOf(const std::string& a, const std::string& b) const {
  return superclassesOf(a).count(b) > 0;
}

std::vector<std::string> Schema::attributesOf(const std::string& concept_) const {
  std::vector<std::string> out;
  for (const auto& [attr, dom] : attributes)
    if (dom == concept_) out.push_back(attr);
  std::sort(out.begin(), out.end());
  return out;
}

Schema extract_schema(const Graph& g) {
  const Term rdfType = Term::iri(vocab::kRdfType);

  std::map<std::string, std::vector<std::string>> domains, ranges;
  std::set<std::string> declaredDatatypeProps, declaredObjectProps, declaredClasses, allProps;
  Schema s;

  for (const auto& t : g.triples) {
    if (!t.subject.isIri()) continue;
    const std::string& subj = t.subject.value;
    const std::string& pred = t.predicate.value;
    if (pred == vocab::kRdfsDomain && t.object.isIri()) {
      domains[subj].push_back(t.object.value);
      allProps.insert(subj);
    } else if (pred == vocab::kRdfsRange && t.object.isIri()) {
      ranges[subj].push_back(t.object.value);
      allProps.insert(subj);
    } else if (pred == vocab::kRdfsSubClassOf && t.object.isIri()) {
      s.subclassEdges.insert({subj, t.object.value});
    } else if (pred == vocab::kRdfType && t.object.isIri()) {
      const std::string& o = t.object.value;
      if (o == vocab::kOwlClass || o == vocab::kRdfsClass) declaredClasses.insert(subj);
      else if (o == vocab::kOwlDatatypeProperty) { declaredDatatypeProps.insert(subj); allProps.insert(subj); }
      else if (o == vocab::kOwlObjectProperty) { declaredObjectProps.insert(subj); allProps.insert(subj); }
      else if (o == vocab::kRdfProperty) allProps.insert(subj);
    } else if ((pred == vocab::kOwlEquivalentClass || pred == vocab::kOwlEquivalentProperty) &&
               t.object.isIri()) {
      s.equivalents[subj].insert(t.object.value);
      s.equivalents[t.object.value].insert(subj);
    }
  }

  for (const auto& p : allProps) {
    const auto& dom = domains[p];
    const auto& rng = ranges[p];
    bool attr = declaredDatatypeProps.count(p) > 0 ||
                (!rng.empty() && isLiteralDatatype(rng.front()));
    if (attr) {
      if (dom.empty()) throw Error("attribute missing domain: " + p);
      s.attributes[p] = dom.front();
    } else {
      if (dom.empty() || rng.empty())
        throw Error("object property missing domain or range: " + p);
      s.objectProperties[p] = {dom.front(), rng.front()};
    }
  }

  // Concepts: declared classes plus every concept-position endpoint.
  s.concepts = declaredClasses;
  for (const auto& [attr, dom] : s.attributes) s.concepts.insert(dom);
  for (const auto& [op, dr] : s.objectProperties) {
    s.concepts.insert(dr.domain);
    s.concepts.insert(dr.range);
  }
  for (const auto& [c, p] : s.subclassEdges) {
    s.concepts.insert(c);
    s.concepts.insert(p);
  }

  checkAcyclic(s.subclassEdges);
  return s;
}

Graph schema_to_graph(const Schema& s) {
  Graph g;
  const Term rdfType = Term::iri(vocab::kRdfType);
  for (const auto& c : s.concepts) g.insert(Term::iri(c), rdfType, Term::iri(vocab::kOwlClass));
  for (const auto& [a, dom] : s.attributes) {
    g.insert(Term::iri(a), rdfType, Term::iri(vocab::kOwlDatatypeProperty));
    g.insert(Term::iri(a), Term::iri(vocab::kRdfsDomain), Term::iri(dom));
    g.insert(Term::iri(a), Term::iri(vocab::kRdfsRange), Term::iri(vocab::kXsdString));
  }
  for (const auto& [p, dr] : s.objectProperties) {
    g.insert(Term::iri(p), rdfType, Term::iri(vocab::kOwlObjectProperty));
    g.insert(Term::iri(p), Term::iri(vocab::kRdfsDomain), Term::iri(dr.domain));
    g.insert(Term::iri(p), Term::iri(vocab::kRdfsRange), Term::iri(dr.range));
  }
  for (const auto& [c, p] : s.subclassEdges)
    g.insert(Term::iri(c), Term::iri(vocab::kRdfsSubClassOf), Term::iri(p));
  for (const auto& [a, eqs] : s.equivalents)
    for (const auto& b : eqs)
      if (a < b) g.insert(Term::iri(a), Term::iri(vocab::kOwlEquivalentClass), Term::iri(b));
  return g;
}

}  // namespace kbmap
