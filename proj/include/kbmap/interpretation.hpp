#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kbmap/association.hpp"

namespace kbmap {

enum class ValidityMode { All, Baseline, R2r, C2a, Full };

ValidityMode validity_mode_from_string(const std::string& s);
std::string to_string(ValidityMode m);

// Small word-backed bitset used for correspondence coverage.
struct BitSet {
  std::vector<std::uint64_t> words;

  BitSet() = default;
  explicit BitSet(int bits) : words((static_cast<std::size_t>(bits) + 63) / 64, 0) {}
  void set(int i) { words[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(int i) const {
    return (words[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1;
  }
  BitSet and_with(const BitSet& o) const;
  bool any() const;
  int count() const;
  std::vector<int> setBits() const;
  auto operator<=>(const BitSet&) const = default;
};

// Flat view of a semantic association's variables: node variables in node order,
// then attribute variables in (node, position) order.
struct VarTable {
  struct Entry {
    bool isAttr = false;
    int node = 0;
    int attrPos = -1;
    std::string name;
  };
  std::vector<Entry> vars;
  std::vector<int> nodeVar;  // node id -> variable index
  int nodeVarCount = 0;

  int varOfAttr(int node, int pos) const;
  int size() const { return static_cast<int>(vars.size()); }
};

VarTable build_var_table(const SemanticAssociation& sa);

struct Skeleton {
  int srcSa = 0, tgtSa = 0;  // indexes into the per-side SA lists
  BitSet covered;
};

// Per-side correspondence witnesses: bit i set iff this SA contains the side's
// witnesses for correspondence i. Coverage of a pair is the AND of both sides.
BitSet side_witnesses(const SemanticAssociation& sa, const AlignmentIndex& idx);

BitSet coverage_of(const SemanticAssociation& S, const SemanticAssociation& T,
                   const AlignmentIndex& idx);

// All (source SA, target SA) pairs with non-empty coverage, in list order.
std::vector<Skeleton> enumerate_skeletons(const std::vector<SemanticAssociation>& srcSAs,
                                          const std::vector<SemanticAssociation>& tgtSAs,
                                          const AlignmentIndex& idx);

// Keeps one skeleton per distinct coverage set: the one whose target association
// has the fewest variables, ties resolved by enumeration order.
std::vector<Skeleton> prune_redundant_skeletons(const std::vector<Skeleton>& sks,
                                                const std::vector<SemanticAssociation>& tgtSAs);

// Renaming: total assignment from target variables to source variables or epsilon.
// Blank-node labels are attached later by the blank-node plan.
inline constexpr int kEpsilon = -1;

struct Renaming {
  std::vector<int> assignment;  // target var index -> source var index or kEpsilon
  std::vector<int> blankLabel;  // target var index -> plan label id or -1

  bool isEpsilon(int v) const { return assignment[static_cast<std::size_t>(v)] == kEpsilon; }
  bool hasBlank(int v) const {
    return !blankLabel.empty() && blankLabel[static_cast<std::size_t>(v)] >= 0;
  }
};

std::string dump_renaming(const Renaming& re, const VarTable& tgtVars, const VarTable& srcVars);

// Node pairs of `sa` whose unique tree path spells `path` between the endpoint
// concepts (subclass edges are transparent).
std::vector<std::pair<int, int>> connected_pairs(const SemanticAssociation& sa,
                                                 const std::array<std::string, 2>& endpoints,
                                                 const PathExpr& path);

struct SkeletonContext {
  const SemanticAssociation* S;
  const SemanticAssociation* T;
  const VarTable* SV;
  const VarTable* TV;
  const BitSet* covered;
  const AlignmentIndex* idx;
};

// All renamings for the skeleton that are total, interpret every covered
// correspondence, and satisfy the mode's validity predicates. With `injective`,
// each source variable is used at most once. Deterministic order.
std::vector<Renaming> enumerate_renamings(const SkeletonContext& sc, ValidityMode mode,
                                          bool injective);

struct ModeCounts {
  std::uint64_t baseline = 0, r2r = 0, c2a = 0, full = 0;
};

// One enumeration pass over baseline-valid renamings, classifying each against the
// stricter predicates. Optionally collects the full-validity renamings.
ModeCounts count_renamings_all_modes(const SkeletonContext& sc, bool injective,
                                     std::vector<Renaming>* fullOut = nullptr);

struct ValidityReport {
  bool ok = true;
  std::vector<std::string> reasons;
};

// Re-checks a renaming against the mode's predicates (independent of the
// enumerator's pruning). Reasons name each violated predicate.
ValidityReport check_validity(const Renaming& re, const SkeletonContext& sc, ValidityMode mode);

}  // namespace kbmap
