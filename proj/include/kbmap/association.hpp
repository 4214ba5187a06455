#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kbmap/alignment.hpp"
#include "kbmap/schema.hpp"

namespace kbmap {

// One traversal step in an association path or semantic-association tree edge.
// Subclass steps are rendered "a"; property steps carry a direction.
struct AssocEdge {
  bool subclass = false;
  std::string property;
  StepDir dir = StepDir::Forward;

  std::string render(const std::map<std::string, std::string>& prefixes = {}) const;
  std::string sortKey() const;
  auto operator<=>(const AssocEdge&) const = default;
};

// A path from an aligned concept to another aligned concept that passes through no
// other aligned concept. The root is excluded; the tail is the final concept.
struct AssociationPath {
  std::vector<AssocEdge> edges;
  std::vector<std::string> concepts;  // concept after each edge; back() == tail

  std::size_t length() const { return edges.size(); }
  const std::string& tail() const { return concepts.back(); }
  std::string render(const std::map<std::string, std::string>& prefixes = {}) const;
  std::string sortKey() const;
};

// An aligned concept with its aligned attributes.
struct BasicAssociation {
  std::string root;
  std::vector<AlignedAttr> alignedAttributes;
};

BasicAssociation basic_association(const AlignmentIndex& idx, Side side, const std::string& concept_);

// All association paths from `root` with at most `maxEdges` edges, in lexicographic
// order of the rendered edge/concept sequence. First step follows rdfs:domain^ or
// rdfs:subClassOf only; immediate property reversal is not allowed.
std::vector<AssociationPath> enumerate_association_paths(const Schema& schema,
                                                         const std::set<std::string>& aligned,
                                                         const std::string& root, int maxEdges);

struct SaNode {
  int id = 0;
  int parent = -1;
  AssocEdge edge;  // edge from parent; meaningless on the root
  std::string concept;
  std::string variable;
  int depth = 0;    // edges from root
  bool aligned = false;
  int anchor = -1;  // aligned node this node's path segment was attached at
  int viaPath = -1;          // index into SemanticAssociation::paths (tail nodes only)
  std::vector<int> children;
  std::vector<AlignedAttr> attributes;     // basic association (aligned nodes only)
  std::vector<std::string> attrVariables;  // parallel to attributes
};

// Variable-labeled tree rooted at an aligned concept, built by recursively
// attaching association paths and basic associations up to branch length L.
struct SemanticAssociation {
  Side side = Side::Source;
  std::string rootConcept;
  int maxLen = 0;        // L
  int maxPathEdges = 0;  // D
  std::vector<SaNode> nodes;                // nodes[0] is the root
  std::vector<AssociationPath> paths;       // association paths referenced by nodes

  // Node whose variable stands for `id` in generated queries: subclass children
  // reuse the parent's variable.
  int effectiveNode(int id) const;
  std::set<std::string> conceptSet() const;
  std::string dump(const std::map<std::string, std::string>& prefixes = {}) const;
};

SemanticAssociation build_semantic_association(const Schema& schema, const AlignmentIndex& idx,
                                               Side side, const std::string& root, int maxLen,
                                               int maxPathEdges);

// One semantic association per aligned concept of the side, ordered by concept IRI.
std::vector<SemanticAssociation> build_all_associations(const Schema& schema,
                                                        const AlignmentIndex& idx, Side side,
                                                        int maxLen, int maxPathEdges);

}  // namespace kbmap
