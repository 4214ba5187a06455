#include "kbmap/association.hpp"

#include <algorithm>
#include <functional>

namespace kbmap {

std::string AssocEdge::render(const std::map<std::string, std::string>& prefixes) const {
  if (subclass) return "a";
  std::string out;
  if (dir == StepDir::Inverse) out.push_back('^');
  out += compact_iri(property, prefixes);
  return out;
}

std::string AssocEdge::sortKey() const {
  if (subclass) return "a";
  return (dir == StepDir::Inverse ? "^" : "") + property;
}

std::string AssociationPath::render(const std::map<std::string, std::string>& prefixes) const {
  std::string out = "[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ", ";
    out += edges[i].render(prefixes);
    out += " ";
    out += compact_iri(concepts[i], prefixes);
  }
  out += "]";
  return out;
}

std::string AssociationPath::sortKey() const {
  std::string key;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    key += edges[i].sortKey();
    key.push_back('\x1f');
    key += concepts[i];
    key.push_back('\x1f');
  }
  return key;
}

BasicAssociation basic_association(const AlignmentIndex& idx, Side side, const std::string& concept_) {
  if (!idx.alignedConcepts[side_index(side)].count(concept_))
    throw Error("not an aligned concept: " + concept_);
  BasicAssociation ba;
  ba.root = concept_;
  auto it = idx.alignedAttrs[side_index(side)].find(concept_);
  if (it != idx.alignedAttrs[side_index(side)].end()) ba.alignedAttributes = it->second;
  return ba;
}

std::vector<AssociationPath> enumerate_association_paths(const Schema& schema,
                                                         const std::set<std::string>& aligned,
                                                         const std::string& root, int maxEdges) {
  std::vector<AssociationPath> out;

  struct Move {
    AssocEdge edge;
    std::string to;
  };
  auto movesFrom = [&](const std::string& c, bool first) {
    std::vector<Move> moves;
    for (const auto& [child, parent] : schema.subclassEdges)
      if (child == c) moves.push_back({{true, "", StepDir::Forward}, parent});
    for (const auto& [p, dr] : schema.objectProperties) {
      if (dr.domain == c) moves.push_back({{false, p, StepDir::Forward}, dr.range});
      if (!first && dr.range == c) moves.push_back({{false, p, StepDir::Inverse}, dr.domain});
    }
    return moves;
  };

  AssociationPath cur;
  std::function<void(const std::string&, bool)> dfs = [&](const std::string& at, bool first) {
    if (static_cast<int>(cur.edges.size()) >= maxEdges) return;
    for (const auto& m : movesFrom(at, first)) {
      if (!cur.edges.empty()) {
        const AssocEdge& prev = cur.edges.back();
        if (!prev.subclass && !m.edge.subclass && prev.property == m.edge.property &&
            prev.dir != m.edge.dir)
          continue;  // immediate reversal lands back on the previous node
      }
      cur.edges.push_back(m.edge);
      cur.concepts.push_back(m.to);
      if (aligned.count(m.to)) {
        out.push_back(cur);
      } else {
        dfs(m.to, false);
      }
      cur.edges.pop_back();
      cur.concepts.pop_back();
    }
  };
  dfs(root, true);

  std::sort(out.begin(), out.end(),
            [](const AssociationPath& a, const AssociationPath& b) { return a.sortKey() < b.sortKey(); });
  return out;
}

namespace {

std::string node_variable(Side side, const std::string& concept_, int id) {
  return std::string(side == Side::Source ? "s_" : "t_") + local_name(concept_) + "_" + std::to_string(id);
}

}  // namespace

int SemanticAssociation::effectiveNode(int id) const {
  int cur = id;
  while (nodes[cur].parent >= 0 && nodes[cur].edge.subclass) cur = nodes[cur].parent;
  return cur;
}

std::set<std::string> SemanticAssociation::conceptSet() const {
  std::set<std::string> out;
  for (const auto& n : nodes) out.insert(n.concept);
  return out;
}

std::string SemanticAssociation::dump(const std::map<std::string, std::string>& prefixes) const {
  std::string out;
  std::function<void(int, int)> rec = [&](int id, int indent) {
    const SaNode& n = nodes[id];
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    if (n.parent >= 0) {
      out += n.edge.render(prefixes);
      out.push_back(' ');
    }
    out += compact_iri(n.concept, prefixes);
    out += " ?" + n.variable;
    for (std::size_t i = 0; i < n.attributes.size(); ++i) {
      out += i == 0 ? " {" : ", ";
      out += compact_iri(n.attributes[i].attribute, prefixes);
      out += " ?" + n.attrVariables[i];
    }
    if (!n.attributes.empty()) out += "}";
    out.push_back('\n');
    for (int c : n.children) rec(c, indent + 1);
  };
  rec(0, 0);
  return out;
}

SemanticAssociation build_semantic_association(const Schema& schema, const AlignmentIndex& idx,
                                               Side side, const std::string& root, int maxLen,
                                               int maxPathEdges) {
  const auto& aligned = idx.alignedConcepts[side_index(side)];
  if (!aligned.count(root)) throw Error("not an aligned concept: " + root);

  SemanticAssociation sa;
  sa.side = side;
  sa.rootConcept = root;
  sa.maxLen = maxLen;
  sa.maxPathEdges = maxPathEdges;

  std::map<std::string, std::vector<AssociationPath>> pathCache;
  auto pathsFrom = [&](const std::string& c) -> const std::vector<AssociationPath>& {
    auto it = pathCache.find(c);
    if (it == pathCache.end())
      it = pathCache.emplace(c, enumerate_association_paths(schema, aligned, c, maxPathEdges)).first;
    return it->second;
  };

  auto makeNode = [&](int parent, const AssocEdge& edge, const std::string& concept_, int depth,
                      bool isAligned, int anchor) {
    SaNode n;
    n.id = static_cast<int>(sa.nodes.size());
    n.parent = parent;
    n.edge = edge;
    n.concept = concept_;
    n.depth = depth;
    n.aligned = isAligned;
    n.anchor = anchor;
    n.variable = node_variable(side, concept_, n.id);
    if (isAligned) {
      auto it = idx.alignedAttrs[side_index(side)].find(concept_);
      if (it != idx.alignedAttrs[side_index(side)].end()) {
        n.attributes = it->second;
        for (const auto& aa : n.attributes)
          n.attrVariables.push_back(n.variable + "_" + local_name(aa.attribute));
      }
    }
    if (parent >= 0) sa.nodes[parent].children.push_back(n.id);
    sa.nodes.push_back(std::move(n));
    return sa.nodes.back().id;
  };

  // Depth-first expansion: each aligned node receives every association path whose
  // edges fit within the branch budget; a fresh node per concept occurrence.
  std::function<void(int)> expand = [&](int alignedNode) {
    const SaNode base = sa.nodes[alignedNode];
    for (const auto& p : pathsFrom(base.concept)) {
      if (base.depth + static_cast<int>(p.length()) > maxLen) continue;
      int pathIdx = static_cast<int>(sa.paths.size());
      sa.paths.push_back(p);
      int parent = alignedNode;
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        bool isTail = i + 1 == p.edges.size();
        int node = makeNode(parent, p.edges[i], p.concepts[i], base.depth + static_cast<int>(i) + 1,
                            isTail, alignedNode);
        if (isTail) {
          sa.nodes[node].viaPath = pathIdx;
          expand(node);
        }
        parent = node;
      }
    }
  };

  makeNode(-1, AssocEdge{}, root, 0, true, -1);
  expand(0);
  return sa;
}

std::vector<SemanticAssociation> build_all_associations(const Schema& schema,
                                                        const AlignmentIndex& idx, Side side,
                                                        int maxLen, int maxPathEdges) {
  std::vector<SemanticAssociation> out;
  for (const auto& c : idx.alignedConcepts[side_index(side)])
    out.push_back(build_semantic_association(schema, idx, side, c, maxLen, maxPathEdges));
  return out;
}

}  // namespace kbmap
