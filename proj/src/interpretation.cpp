#include "kbmap/interpretation.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace kbmap {

ValidityMode validity_mode_from_string(const std::string& s) {
  if (s == "all") return ValidityMode::All;
  if (s == "baseline") return ValidityMode::Baseline;
  if (s == "r2r") return ValidityMode::R2r;
  if (s == "c2a") return ValidityMode::C2a;
  if (s == "full") return ValidityMode::Full;
  throw Error("unknown validity mode: " + s);
}

std::string to_string(ValidityMode m) {
  switch (m) {
    case ValidityMode::All: return "all";
    case ValidityMode::Baseline: return "baseline";
    case ValidityMode::R2r: return "r2r";
    case ValidityMode::C2a: return "c2a";
    case ValidityMode::Full: return "full";
  }
  return "?";
}

BitSet BitSet::and_with(const BitSet& o) const {
  BitSet r;
  r.words.resize(std::min(words.size(), o.words.size()));
  for (std::size_t i = 0; i < r.words.size(); ++i) r.words[i] = words[i] & o.words[i];
  return r;
}

bool BitSet::any() const {
  for (auto w : words)
    if (w) return true;
  return false;
}

int BitSet::count() const {
  int n = 0;
  for (auto w : words) n += std::popcount(w);
  return n;
}

std::vector<int> BitSet::setBits() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (int b = 0; b < 64; ++b)
      if ((words[i] >> b) & 1) out.push_back(static_cast<int>(i) * 64 + b);
  return out;
}

VarTable build_var_table(const SemanticAssociation& sa) {
  VarTable vt;
  vt.nodeVar.resize(sa.nodes.size());
  for (const auto& n : sa.nodes) {
    vt.nodeVar[static_cast<std::size_t>(n.id)] = vt.size();
    vt.vars.push_back({false, n.id, -1, n.variable});
  }
  vt.nodeVarCount = vt.size();
  for (const auto& n : sa.nodes)
    for (std::size_t p = 0; p < n.attributes.size(); ++p)
      vt.vars.push_back({true, n.id, static_cast<int>(p), n.attrVariables[p]});
  return vt;
}

int VarTable::varOfAttr(int node, int pos) const {
  for (int v = nodeVarCount; v < size(); ++v)
    if (vars[static_cast<std::size_t>(v)].node == node && vars[static_cast<std::size_t>(v)].attrPos == pos)
      return v;
  throw Error("attribute variable not found");
}

BitSet side_witnesses(const SemanticAssociation& sa, const AlignmentIndex& idx) {
  BitSet bits(idx.corrCount());
  int s = side_index(sa.side);
  auto concepts = sa.conceptSet();
  for (const auto& e : idx.c2c) {
    const std::string& c = s == 0 ? e.source : e.target;
    if (concepts.count(c)) bits.set(e.corr);
  }
  for (std::size_t k = 0; k < idx.a2a.size(); ++k) {
    bool found = false;
    for (const auto& n : sa.nodes) {
      for (const auto& aa : n.attributes) {
        if (std::find(aa.a2aIndexes.begin(), aa.a2aIndexes.end(), static_cast<int>(k)) !=
            aa.a2aIndexes.end()) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (found) bits.set(idx.a2a[k].corr);
  }
  for (const auto& e : idx.r2r) {
    const auto& ends = s == 0 ? e.srcEndpoints : e.tgtEndpoints;
    bool e0 = concepts.count(ends[0]) > 0, e1 = concepts.count(ends[1]) > 0;
    if (e0 && e1) bits.set(e.corr);
  }
  return bits;
}

BitSet coverage_of(const SemanticAssociation& S, const SemanticAssociation& T,
                   const AlignmentIndex& idx) {
  return side_witnesses(S, idx).and_with(side_witnesses(T, idx));
}

std::vector<Skeleton> enumerate_skeletons(const std::vector<SemanticAssociation>& srcSAs,
                                          const std::vector<SemanticAssociation>& tgtSAs,
                                          const AlignmentIndex& idx) {
  std::vector<BitSet> sw, tw;
  sw.reserve(srcSAs.size());
  tw.reserve(tgtSAs.size());
  for (const auto& sa : srcSAs) sw.push_back(side_witnesses(sa, idx));
  for (const auto& sa : tgtSAs) tw.push_back(side_witnesses(sa, idx));

  std::vector<Skeleton> out;
  for (std::size_t i = 0; i < srcSAs.size(); ++i) {
    for (std::size_t j = 0; j < tgtSAs.size(); ++j) {
      BitSet cov = sw[i].and_with(tw[j]);
      if (cov.any()) out.push_back({static_cast<int>(i), static_cast<int>(j), std::move(cov)});
    }
  }
  return out;
}

std::vector<Skeleton> prune_redundant_skeletons(const std::vector<Skeleton>& sks,
                                                const std::vector<SemanticAssociation>& tgtSAs) {
  auto tvarCount = [&](const Skeleton& sk) {
    const auto& sa = tgtSAs[static_cast<std::size_t>(sk.tgtSa)];
    std::size_t n = sa.nodes.size();
    for (const auto& node : sa.nodes) n += node.attributes.size();
    return n;
  };
  std::map<std::vector<std::uint64_t>, std::size_t> best;  // coverage -> index into sks
  for (std::size_t i = 0; i < sks.size(); ++i) {
    auto [it, inserted] = best.try_emplace(sks[i].covered.words, i);
    if (!inserted && tvarCount(sks[i]) < tvarCount(sks[it->second])) it->second = i;
  }
  std::vector<std::size_t> keep;
  for (const auto& [cov, i] : best) keep.push_back(i);
  std::sort(keep.begin(), keep.end());
  std::vector<Skeleton> out;
  for (auto i : keep) out.push_back(sks[i]);
  return out;
}

std::vector<std::pair<int, int>> connected_pairs(const SemanticAssociation& sa,
                                                 const std::array<std::string, 2>& endpoints,
                                                 const PathExpr& path) {
  // Contracted tree: subclass edges collapse into the parent's vertex.
  std::vector<int> eff(sa.nodes.size());
  for (const auto& n : sa.nodes) eff[static_cast<std::size_t>(n.id)] = sa.effectiveNode(n.id);

  auto cparent = [&](int v) -> int {  // contracted parent and connecting edge node
    int p = sa.nodes[static_cast<std::size_t>(v)].parent;
    return p < 0 ? -1 : eff[static_cast<std::size_t>(p)];
  };

  auto stepsBetween = [&](int a, int b, std::vector<PathStep>& out) {
    // Unique path a..b in the contracted tree, translated to property steps.
    std::map<int, int> aDepth;
    for (int v = a; v >= 0; v = cparent(v)) {
      aDepth[v] = static_cast<int>(aDepth.size());
      if (v == 0) break;
    }
    int meet = b;
    while (!aDepth.count(meet)) {
      meet = cparent(meet);
      if (meet < 0) return false;
    }
    out.clear();
    for (int v = a; v != meet; v = cparent(v)) {
      const auto& e = sa.nodes[static_cast<std::size_t>(v)].edge;
      out.push_back({e.property, e.dir == StepDir::Forward ? StepDir::Inverse : StepDir::Forward});
    }
    std::vector<PathStep> down;
    for (int v = b; v != meet; v = cparent(v)) {
      const auto& e = sa.nodes[static_cast<std::size_t>(v)].edge;
      down.push_back({e.property, e.dir});
    }
    out.insert(out.end(), down.rbegin(), down.rend());
    return true;
  };

  std::vector<std::pair<int, int>> out;
  std::vector<PathStep> steps;
  for (const auto& n1 : sa.nodes) {
    if (n1.concept != endpoints[0]) continue;
    for (const auto& n2 : sa.nodes) {
      if (n2.concept != endpoints[1]) continue;
      if (!stepsBetween(eff[static_cast<std::size_t>(n1.id)], eff[static_cast<std::size_t>(n2.id)], steps))
        continue;
      if (steps == path.steps) out.push_back({n1.id, n2.id});
    }
  }
  return out;
}

std::string dump_renaming(const Renaming& re, const VarTable& tgtVars, const VarTable& srcVars) {
  std::string out;
  for (int v = 0; v < tgtVars.size(); ++v) {
    out += tgtVars.vars[static_cast<std::size_t>(v)].name;
    out += " <- ";
    int img = re.assignment[static_cast<std::size_t>(v)];
    if (img == kEpsilon) {
      if (re.hasBlank(v))
        out += "_:b" + std::to_string(re.blankLabel[static_cast<std::size_t>(v)]);
      else
        out += "ε";
    } else {
      out += srcVars.vars[static_cast<std::size_t>(img)].name;
    }
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Renaming enumeration
// ---------------------------------------------------------------------------

namespace {

constexpr int kUnassigned = -2;

struct PairWitness {
  int tVar, sVar;
};
struct QuadWitness {
  int tVar1, sVar1, tVar2, sVar2;
};

struct CorrReq {
  char kind = 'c';
  std::vector<PairWitness> pairs;
  std::vector<QuadWitness> quads;           // typed endpoint combinations (baseline sense)
  std::vector<QuadWitness> quadsConnected;  // connected through both paths
  int lastVar = -1;
};

struct Enumerator {
  const SkeletonContext& sc;
  bool injective;
  bool baselineLicensing;   // candidate sets restricted by correspondences
  bool needC2a;
  bool needAux;
  bool needR2rConnected;    // r2r interpretation must be connected during search
  bool classify;            // count-all mode

  int nTgt = 0, nTgtNodes = 0, nSrc = 0;
  std::vector<std::vector<int>> candidates;  // per target var, sorted source vars
  std::vector<int> rootAllowed;              // min-depth candidates for the root (aux)
  std::vector<CorrReq> reqs;

  std::vector<int> assign;
  std::vector<char> usedSrc;
  std::vector<int> srcNodeImageCount;  // per source var: times bound by a target *node* var

  ModeCounts counts;
  std::vector<Renaming>* sink = nullptr;
  std::vector<Renaming>* fullSink = nullptr;

  explicit Enumerator(const SkeletonContext& s) : sc(s) {}

  const SaNode& tgtNodeOfVar(int v) const {
    return sc.T->nodes[static_cast<std::size_t>(sc.TV->vars[static_cast<std::size_t>(v)].node)];
  }
  const SaNode& srcNodeOfVar(int v) const {
    return sc.S->nodes[static_cast<std::size_t>(sc.SV->vars[static_cast<std::size_t>(v)].node)];
  }

  void buildCandidates() {
    nTgt = sc.TV->size();
    nTgtNodes = sc.TV->nodeVarCount;
    nSrc = sc.SV->size();
    candidates.assign(static_cast<std::size_t>(nTgt), {});
    for (int v = 0; v < nTgt; ++v) {
      const auto& tv = sc.TV->vars[static_cast<std::size_t>(v)];
      if (!tv.isAttr) {
        const std::string& t = tgtNodeOfVar(v).concept;
        for (int u = 0; u < sc.SV->nodeVarCount; ++u) {
          const std::string& s = srcNodeOfVar(u).concept;
          if (!baselineLicensing || sc.idx->licensed(s, t)) candidates[static_cast<std::size_t>(v)].push_back(u);
        }
      } else {
        const auto& ta = tgtNodeOfVar(v).attributes[static_cast<std::size_t>(tv.attrPos)];
        for (int u = sc.SV->nodeVarCount; u < nSrc; ++u) {
          const auto& sv = sc.SV->vars[static_cast<std::size_t>(u)];
          const auto& sa = srcNodeOfVar(u).attributes[static_cast<std::size_t>(sv.attrPos)];
          bool ok = !baselineLicensing;
          if (!ok) {
            for (int k : ta.a2aIndexes)
              if (std::find(sa.a2aIndexes.begin(), sa.a2aIndexes.end(), k) != sa.a2aIndexes.end()) {
                ok = true;
                break;
              }
          }
          if (ok) candidates[static_cast<std::size_t>(v)].push_back(u);
        }
      }
    }
    // Root-mapping constraint: only corresponding-concept variables at minimum
    // distance from the source root may bind the target root variable.
    rootAllowed = candidates[0];
    if (!rootAllowed.empty()) {
      int minDepth = sc.S->nodes.back().depth + 1;
      for (int u : rootAllowed) minDepth = std::min(minDepth, srcNodeOfVar(u).depth);
      std::vector<int> keep;
      for (int u : rootAllowed)
        if (srcNodeOfVar(u).depth == minDepth) keep.push_back(u);
      rootAllowed = std::move(keep);
    }
    if (needAux) candidates[0] = rootAllowed;
  }

  void buildRequirements() {
    for (const auto& e : sc.idx->c2c) {
      if (!sc.covered->test(e.corr)) continue;
      CorrReq r;
      r.kind = 'c';
      for (int v = 0; v < nTgtNodes; ++v) {
        if (tgtNodeOfVar(v).concept != e.target) continue;
        for (int u : candidates[static_cast<std::size_t>(v)])
          if (srcNodeOfVar(u).concept == e.source) r.pairs.push_back({v, u});
      }
      for (const auto& p : r.pairs) r.lastVar = std::max(r.lastVar, p.tVar);
      reqs.push_back(std::move(r));
    }
    for (std::size_t k = 0; k < sc.idx->a2a.size(); ++k) {
      const auto& e = sc.idx->a2a[k];
      if (!sc.covered->test(e.corr)) continue;
      CorrReq r;
      r.kind = 'a';
      for (int v = nTgtNodes; v < nTgt; ++v) {
        const auto& tv = sc.TV->vars[static_cast<std::size_t>(v)];
        const auto& ta = tgtNodeOfVar(v).attributes[static_cast<std::size_t>(tv.attrPos)];
        if (std::find(ta.a2aIndexes.begin(), ta.a2aIndexes.end(), static_cast<int>(k)) ==
            ta.a2aIndexes.end())
          continue;
        for (int u : candidates[static_cast<std::size_t>(v)]) {
          const auto& sv = sc.SV->vars[static_cast<std::size_t>(u)];
          const auto& sa = srcNodeOfVar(u).attributes[static_cast<std::size_t>(sv.attrPos)];
          if (std::find(sa.a2aIndexes.begin(), sa.a2aIndexes.end(), static_cast<int>(k)) !=
              sa.a2aIndexes.end())
            r.pairs.push_back({v, u});
        }
      }
      for (const auto& p : r.pairs) r.lastVar = std::max(r.lastVar, p.tVar);
      reqs.push_back(std::move(r));
    }
    for (const auto& e : sc.idx->r2r) {
      if (!sc.covered->test(e.corr)) continue;
      CorrReq r;
      r.kind = 'r';
      auto typedPairs = [&](const SemanticAssociation& sa, const VarTable& vt,
                            const std::array<std::string, 2>& ends) {
        std::vector<std::pair<int, int>> out;
        for (const auto& n1 : sa.nodes)
          if (n1.concept == ends[0])
            for (const auto& n2 : sa.nodes)
              if (n2.concept == ends[1])
                out.push_back({vt.nodeVar[static_cast<std::size_t>(n1.id)],
                               vt.nodeVar[static_cast<std::size_t>(n2.id)]});
        return out;
      };
      auto srcTyped = typedPairs(*sc.S, *sc.SV, e.srcEndpoints);
      auto tgtTyped = typedPairs(*sc.T, *sc.TV, e.tgtEndpoints);
      for (const auto& [m1, m2] : tgtTyped)
        for (const auto& [n1, n2] : srcTyped) r.quads.push_back({m1, n1, m2, n2});

      auto srcConn = connected_pairs(*sc.S, e.srcEndpoints, e.srcPath);
      auto tgtConn = connected_pairs(*sc.T, e.tgtEndpoints, e.tgtPath);
      for (const auto& [m1n, m2n] : tgtConn)
        for (const auto& [n1n, n2n] : srcConn)
          r.quadsConnected.push_back({sc.TV->nodeVar[static_cast<std::size_t>(m1n)],
                                      sc.SV->nodeVar[static_cast<std::size_t>(n1n)],
                                      sc.TV->nodeVar[static_cast<std::size_t>(m2n)],
                                      sc.SV->nodeVar[static_cast<std::size_t>(n2n)]});
      const auto& searched = needR2rConnected ? r.quadsConnected : r.quads;
      for (const auto& q : searched) r.lastVar = std::max({r.lastVar, q.tVar1, q.tVar2});
      reqs.push_back(std::move(r));
    }
  }

  bool reqSatisfied(const CorrReq& r) const {
    if (r.kind != 'r') {
      for (const auto& p : r.pairs)
        if (assign[static_cast<std::size_t>(p.tVar)] == p.sVar) return true;
      return false;
    }
    const auto& quads = needR2rConnected ? r.quadsConnected : r.quads;
    for (const auto& q : quads)
      if (assign[static_cast<std::size_t>(q.tVar1)] == q.sVar1 &&
          assign[static_cast<std::size_t>(q.tVar2)] == q.sVar2)
        return true;
    return false;
  }

  bool r2rConnectedSatisfied(const CorrReq& r) const {
    for (const auto& q : r.quadsConnected)
      if (assign[static_cast<std::size_t>(q.tVar1)] == q.sVar1 &&
          assign[static_cast<std::size_t>(q.tVar2)] == q.sVar2)
        return true;
    return false;
  }

  // c2a: an attribute of a mapped node must map to the image node's own attribute.
  bool c2aOkFor(int v, int value) const {
    if (value == kEpsilon) return true;
    const auto& tv = sc.TV->vars[static_cast<std::size_t>(v)];
    int nodeImg = assign[static_cast<std::size_t>(sc.TV->nodeVar[static_cast<std::size_t>(tv.node)])];
    if (nodeImg == kEpsilon) return true;
    return sc.SV->vars[static_cast<std::size_t>(value)].node ==
           sc.SV->vars[static_cast<std::size_t>(nodeImg)].node;
  }

  // Ownership: attributes of an epsilon-mapped node whose concept has a c2c may
  // only take attributes of source individuals that are themselves transferred.
  bool ownershipOkFor(int v, int value) const {
    if (value == kEpsilon) return true;
    const auto& tv = sc.TV->vars[static_cast<std::size_t>(v)];
    int nodeImg = assign[static_cast<std::size_t>(sc.TV->nodeVar[static_cast<std::size_t>(tv.node)])];
    if (nodeImg != kEpsilon) return true;
    const std::string& t = tgtNodeOfVar(v).concept;
    if (!sc.idx->c2cConcepts[1].count(t)) return true;
    int srcNodeVar = sc.SV->nodeVar[static_cast<std::size_t>(sc.SV->vars[static_cast<std::size_t>(value)].node)];
    return srcNodeImageCount[static_cast<std::size_t>(srcNodeVar)] > 0;
  }

  bool rootOk(int value) const {
    if (value == kEpsilon) return true;
    return std::find(rootAllowed.begin(), rootAllowed.end(), value) != rootAllowed.end();
  }

  void emit() {
    if (classify) {
      ++counts.baseline;
      bool r2rOk = true;
      for (const auto& r : reqs)
        if (r.kind == 'r' && !r2rConnectedSatisfied(r)) {
          r2rOk = false;
          break;
        }
      bool c2aOk = true;
      for (int v = nTgtNodes; v < nTgt && c2aOk; ++v)
        c2aOk = c2aOkFor(v, assign[static_cast<std::size_t>(v)]);
      bool auxOk = rootOk(assign[0]);
      for (int v = nTgtNodes; v < nTgt && auxOk; ++v)
        auxOk = ownershipOkFor(v, assign[static_cast<std::size_t>(v)]);
      if (r2rOk) ++counts.r2r;
      if (c2aOk) ++counts.c2a;
      if (r2rOk && c2aOk && auxOk) {
        ++counts.full;
        if (fullSink) {
          Renaming re;
          re.assignment = assign;
          re.blankLabel.assign(assign.size(), -1);
          fullSink->push_back(std::move(re));
        }
      }
      return;
    }
    if (sink) {
      Renaming re;
      re.assignment = assign;
      re.blankLabel.assign(assign.size(), -1);
      sink->push_back(std::move(re));
    }
  }

  void search(int v) {
    if (v == nTgt) {
      emit();
      return;
    }
    bool isNodeVar = v < nTgtNodes;
    auto tryValue = [&](int value) {
      if (value != kEpsilon) {
        if (injective && usedSrc[static_cast<std::size_t>(value)]) return;
        if (!classify) {
          if (needC2a && !isNodeVar && !c2aOkFor(v, value)) return;
          if (needAux && !isNodeVar && !ownershipOkFor(v, value)) return;
        }
      }
      assign[static_cast<std::size_t>(v)] = value;
      if (value != kEpsilon) {
        usedSrc[static_cast<std::size_t>(value)] = 1;
        if (isNodeVar) ++srcNodeImageCount[static_cast<std::size_t>(value)];
      }
      bool feasible = true;
      for (const auto& r : reqs)
        if (r.lastVar == v && !reqSatisfied(r)) {
          feasible = false;
          break;
        }
      if (feasible) search(v + 1);
      assign[static_cast<std::size_t>(v)] = kUnassigned;
      if (value != kEpsilon) {
        usedSrc[static_cast<std::size_t>(value)] = 0;
        if (isNodeVar) --srcNodeImageCount[static_cast<std::size_t>(value)];
      }
    };
    for (int value : candidates[static_cast<std::size_t>(v)]) tryValue(value);
    tryValue(kEpsilon);
  }

  void run() {
    buildCandidates();
    buildRequirements();
    // A covered correspondence with no witness pairs can never be interpreted.
    for (const auto& r : reqs) {
      if (r.kind != 'r' && r.pairs.empty()) return;
      if (r.kind == 'r' && (needR2rConnected ? r.quadsConnected.empty() : r.quads.empty())) return;
    }
    assign.assign(static_cast<std::size_t>(nTgt), kUnassigned);
    usedSrc.assign(static_cast<std::size_t>(nSrc), 0);
    srcNodeImageCount.assign(static_cast<std::size_t>(nSrc), 0);
    search(0);
  }
};

}  // namespace

std::vector<Renaming> enumerate_renamings(const SkeletonContext& sc, ValidityMode mode,
                                          bool injective) {
  Enumerator e(sc);
  e.injective = injective;
  e.baselineLicensing = mode != ValidityMode::All;
  e.needC2a = mode == ValidityMode::C2a || mode == ValidityMode::Full;
  e.needAux = mode == ValidityMode::Full;
  e.needR2rConnected = mode == ValidityMode::R2r || mode == ValidityMode::Full;
  e.classify = false;
  std::vector<Renaming> out;
  e.sink = &out;
  e.run();
  return out;
}

ModeCounts count_renamings_all_modes(const SkeletonContext& sc, bool injective,
                                     std::vector<Renaming>* fullOut) {
  Enumerator e(sc);
  e.injective = injective;
  e.baselineLicensing = true;
  e.needC2a = false;
  e.needAux = false;
  e.needR2rConnected = false;
  e.classify = true;
  e.fullSink = fullOut;
  e.run();
  return e.counts;
}

ValidityReport check_validity(const Renaming& re, const SkeletonContext& sc, ValidityMode mode) {
  ValidityReport rep;
  auto fail = [&](const std::string& r) {
    rep.ok = false;
    rep.reasons.push_back(r);
  };

  const VarTable& TV = *sc.TV;
  const VarTable& SV = *sc.SV;
  if (re.assignment.size() != static_cast<std::size_t>(TV.size())) {
    fail("totality: assignment size mismatch");
    return rep;
  }

  auto tgtNode = [&](int v) -> const SaNode& {
    return sc.T->nodes[static_cast<std::size_t>(TV.vars[static_cast<std::size_t>(v)].node)];
  };
  auto srcNode = [&](int v) -> const SaNode& {
    return sc.S->nodes[static_cast<std::size_t>(SV.vars[static_cast<std::size_t>(v)].node)];
  };

  // Type discipline: node variables to node variables, attributes to attributes.
  for (int v = 0; v < TV.size(); ++v) {
    int img = re.assignment[static_cast<std::size_t>(v)];
    if (img == kEpsilon) continue;
    if (img < 0 || img >= SV.size()) {
      fail("totality: image out of range");
      return rep;
    }
    if (TV.vars[static_cast<std::size_t>(v)].isAttr != SV.vars[static_cast<std::size_t>(img)].isAttr)
      fail("type discipline: " + TV.vars[static_cast<std::size_t>(v)].name);
  }

  if (mode != ValidityMode::All) {
    // Baseline: every binding licensed by a correspondence.
    for (int v = 0; v < TV.size(); ++v) {
      int img = re.assignment[static_cast<std::size_t>(v)];
      if (img == kEpsilon) continue;
      const auto& tv = TV.vars[static_cast<std::size_t>(v)];
      if (!tv.isAttr) {
        if (!sc.idx->licensed(srcNode(img).concept, tgtNode(v).concept))
          fail("baseline: node binding not licensed: " + tv.name);
      } else {
        const auto& ta = tgtNode(v).attributes[static_cast<std::size_t>(tv.attrPos)];
        const auto& sv = SV.vars[static_cast<std::size_t>(img)];
        const auto& sa = srcNode(img).attributes[static_cast<std::size_t>(sv.attrPos)];
        bool lic = false;
        for (int k : ta.a2aIndexes)
          if (std::find(sa.a2aIndexes.begin(), sa.a2aIndexes.end(), k) != sa.a2aIndexes.end())
            lic = true;
        if (!lic) fail("baseline: attribute binding not licensed: " + tv.name);
      }
    }
  }

  // Coverage: at least one interpretation of each covered correspondence.
  bool connectedR2r = mode == ValidityMode::R2r || mode == ValidityMode::Full;
  for (const auto& e : sc.idx->c2c) {
    if (!sc.covered->test(e.corr)) continue;
    bool sat = false;
    for (int v = 0; v < TV.nodeVarCount && !sat; ++v) {
      int img = re.assignment[static_cast<std::size_t>(v)];
      sat = img != kEpsilon && !TV.vars[static_cast<std::size_t>(v)].isAttr &&
            tgtNode(v).concept == e.target && srcNode(img).concept == e.source;
    }
    if (!sat) fail("coverage: no interpretation of " + sc.idx->corrIds[static_cast<std::size_t>(e.corr)]);
  }
  for (std::size_t k = 0; k < sc.idx->a2a.size(); ++k) {
    const auto& e = sc.idx->a2a[k];
    if (!sc.covered->test(e.corr)) continue;
    bool sat = false;
    for (int v = TV.nodeVarCount; v < TV.size() && !sat; ++v) {
      int img = re.assignment[static_cast<std::size_t>(v)];
      if (img == kEpsilon) continue;
      const auto& tv = TV.vars[static_cast<std::size_t>(v)];
      const auto& ta = tgtNode(v).attributes[static_cast<std::size_t>(tv.attrPos)];
      if (std::find(ta.a2aIndexes.begin(), ta.a2aIndexes.end(), static_cast<int>(k)) ==
          ta.a2aIndexes.end())
        continue;
      const auto& sv = SV.vars[static_cast<std::size_t>(img)];
      const auto& sa = srcNode(img).attributes[static_cast<std::size_t>(sv.attrPos)];
      sat = std::find(sa.a2aIndexes.begin(), sa.a2aIndexes.end(), static_cast<int>(k)) !=
            sa.a2aIndexes.end();
    }
    if (!sat) fail("coverage: no interpretation of " + sc.idx->corrIds[static_cast<std::size_t>(e.corr)]);
  }
  for (const auto& e : sc.idx->r2r) {
    if (!sc.covered->test(e.corr)) continue;
    bool sat = false;
    if (connectedR2r) {
      auto srcConn = connected_pairs(*sc.S, e.srcEndpoints, e.srcPath);
      auto tgtConn = connected_pairs(*sc.T, e.tgtEndpoints, e.tgtPath);
      for (const auto& [m1, m2] : tgtConn)
        for (const auto& [n1, n2] : srcConn)
          if (re.assignment[static_cast<std::size_t>(TV.nodeVar[static_cast<std::size_t>(m1)])] ==
                  SV.nodeVar[static_cast<std::size_t>(n1)] &&
              re.assignment[static_cast<std::size_t>(TV.nodeVar[static_cast<std::size_t>(m2)])] ==
                  SV.nodeVar[static_cast<std::size_t>(n2)])
            sat = true;
      if (!sat)
        fail("r2r: no connected witness for " + sc.idx->corrIds[static_cast<std::size_t>(e.corr)]);
    } else {
      for (int v1 = 0; v1 < TV.nodeVarCount && !sat; ++v1)
        for (int v2 = 0; v2 < TV.nodeVarCount && !sat; ++v2) {
          int i1 = re.assignment[static_cast<std::size_t>(v1)], i2 = re.assignment[static_cast<std::size_t>(v2)];
          sat = i1 != kEpsilon && i2 != kEpsilon && tgtNode(v1).concept == e.tgtEndpoints[0] &&
                tgtNode(v2).concept == e.tgtEndpoints[1] && srcNode(i1).concept == e.srcEndpoints[0] &&
                srcNode(i2).concept == e.srcEndpoints[1];
        }
      if (!sat) fail("coverage: no interpretation of " + sc.idx->corrIds[static_cast<std::size_t>(e.corr)]);
    }
  }

  if (mode == ValidityMode::C2a || mode == ValidityMode::Full) {
    for (int v = TV.nodeVarCount; v < TV.size(); ++v) {
      int img = re.assignment[static_cast<std::size_t>(v)];
      if (img == kEpsilon) continue;
      const auto& tv = TV.vars[static_cast<std::size_t>(v)];
      int nodeImg = re.assignment[static_cast<std::size_t>(TV.nodeVar[static_cast<std::size_t>(tv.node)])];
      if (nodeImg == kEpsilon) continue;
      if (SV.vars[static_cast<std::size_t>(img)].node != SV.vars[static_cast<std::size_t>(nodeImg)].node)
        fail("c2a: attribute bound across individuals: " + tv.name);
    }
  }

  if (mode == ValidityMode::Full) {
    // Root constraint.
    int rootImg = re.assignment[0];
    if (rootImg != kEpsilon) {
      const std::string& t = tgtNode(0).concept;
      int minDepth = -1;
      for (int u = 0; u < SV.nodeVarCount; ++u)
        if (sc.idx->licensed(srcNode(u).concept, t))
          minDepth = minDepth < 0 ? srcNode(u).depth : std::min(minDepth, srcNode(u).depth);
      if (minDepth >= 0 && srcNode(rootImg).depth != minDepth)
        fail("root: target root bound beyond minimum distance");
    }
    // Ownership constraint.
    for (int v = TV.nodeVarCount; v < TV.size(); ++v) {
      int img = re.assignment[static_cast<std::size_t>(v)];
      if (img == kEpsilon) continue;
      const auto& tv = TV.vars[static_cast<std::size_t>(v)];
      int nodeImg = re.assignment[static_cast<std::size_t>(TV.nodeVar[static_cast<std::size_t>(tv.node)])];
      if (nodeImg != kEpsilon) continue;
      if (!sc.idx->c2cConcepts[1].count(tgtNode(v).concept)) continue;
      int srcOwnerVar = SV.nodeVar[static_cast<std::size_t>(SV.vars[static_cast<std::size_t>(img)].node)];
      bool transferred = false;
      for (int w = 0; w < TV.nodeVarCount && !transferred; ++w)
        transferred = re.assignment[static_cast<std::size_t>(w)] == srcOwnerVar;
      if (!transferred)
        fail("ownership: attribute of untransferred individual: " + tv.name);
    }
  }

  return rep;
}

}  // namespace kbmap
