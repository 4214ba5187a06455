#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kbmap/path_expr.hpp"
#include "kbmap/schema.hpp"

namespace kbmap {

enum class Side { Source, Target };
inline int side_index(Side s) { return s == Side::Source ? 0 : 1; }
inline Side other_side(Side s) { return s == Side::Source ? Side::Target : Side::Source; }

enum class CorrKind { C2c, A2a, R2r };

// One correspondence. a2a entries carry a root concept and a data path whose final
// step is an attribute; r2r entries carry declared endpoints and an object path.
struct Correspondence {
  std::string id;
  CorrKind kind = CorrKind::C2c;
  std::string sourceConcept, targetConcept;
  PathExpr sourcePath, targetPath;
  std::array<std::string, 2> sourceEndpoints{}, targetEndpoints{};
};

struct Alignment {
  std::vector<Correspondence> correspondences;
  std::map<std::string, std::string> prefixes;
};

// Parses the alignment document (JSON; see README for the format). Entries of kind
// "a2c" (attribute-to-concept) are rewritten to a2a targeting rdfs:label of the
// target concept. Throws Error on unknown kind, malformed path, or duplicate id.
Alignment parse_alignment(const std::string& text);
std::string render_alignment(const Alignment& a);
Alignment load_alignment_file(const std::string& path);

// Checks every referenced IRI and the type-correctness of every path expression
// against the two schemas. Empty report = valid.
std::vector<std::string> validate_alignment(const Alignment& a, const Schema& src, const Schema& tgt);

// Concepts participating in a c2c correspondence plus, per a2a, the root concept
// and every concept along the data path.
std::set<std::string> aligned_concepts(const Alignment& a, Side side, const Schema& schema);

// ---- Resolved view -------------------------------------------------------------

struct C2cEntry {
  int corr;  // index into corrIds
  std::string source, target;
};

// Per-side view of an a2a data path: the final attribute and the concept at which
// the attribute is matched (domain of the final step along the walk).
struct A2aSide {
  std::string root;
  std::vector<std::string> pathConcepts;  // root plus concept after each non-final step
  std::string attribute;
  std::string attrConcept;  // concept owning the attribute within associations
};

struct A2aEntry {
  int corr;
  A2aSide src, tgt;
};

struct R2rEntry {
  int corr;
  std::array<std::string, 2> srcEndpoints, tgtEndpoints;
  PathExpr srcPath, tgtPath;
};

// An attribute aligned at a concept, with every a2a correspondence licensing it.
struct AlignedAttr {
  std::string attribute;
  std::vector<int> a2aIndexes;  // indexes into AlignmentIndex::a2a
  auto operator<=>(const AlignedAttr&) const = default;
};

// Immutable index over a validated alignment; everything downstream works off this.
struct AlignmentIndex {
  std::vector<std::string> corrIds;  // bit position per correspondence
  std::vector<C2cEntry> c2c;
  std::vector<A2aEntry> a2a;
  std::vector<R2rEntry> r2r;

  std::set<std::string> alignedConcepts[2];
  // concept -> sorted list of aligned attributes on that side
  std::map<std::string, std::vector<AlignedAttr>> alignedAttrs[2];
  // c2c licensing: pairs (source concept, target concept)
  std::set<std::pair<std::string, std::string>> c2cPairs;
  // concepts with at least one c2c, per side
  std::set<std::string> c2cConcepts[2];
  std::map<std::string, std::string> prefixes;

  int corrCount() const { return static_cast<int>(corrIds.size()); }
  bool licensed(const std::string& srcConcept, const std::string& tgtConcept) const {
    return c2cPairs.count({srcConcept, tgtConcept}) > 0;
  }
};

// Validates and indexes; throws Error listing the first failures when invalid.
AlignmentIndex resolve_alignment(const Alignment& a, const Schema& src, const Schema& tgt);

}  // namespace kbmap
