#include "kbmap/alignment.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kbmap {

namespace {

using json = nlohmann::ordered_json;

// Concepts are compatible when equal or related by subclassing.
bool compat(const Schema& s, const std::string& a, const std::string& b) {
  return a == b || s.subclassOf(a, b) || s.subclassOf(b, a);
}

struct Walk {
  bool ok = false;
  std::string err;
  std::vector<std::string> concepts;  // concept before each step; front() = root
  std::string attrConcept;            // a2a only: concept at the attribute step
};

// Walks an object-property path (optionally ending in an attribute) from `root`.
Walk walk_path(const Schema& s, const std::string& root, const PathExpr& path, bool endsInAttribute,
               const std::string& what) {
  Walk w;
  if (!s.isConcept(root)) {
    w.err = what + ": unknown concept " + root;
    return w;
  }
  std::string cur = root;
  w.concepts.push_back(cur);
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const auto& step = path.steps[i];
    bool last = i + 1 == path.steps.size();
    if (endsInAttribute && last) {
      if (step.dir != StepDir::Forward) {
        w.err = what + ": attribute step must be forward: " + step.property;
        return w;
      }
      if (step.property == vocab::kRdfsLabel) {  // implicit attribute of any concept
        w.attrConcept = cur;
        w.ok = true;
        return w;
      }
      auto it = s.attributes.find(step.property);
      if (it == s.attributes.end()) {
        w.err = what + ": unknown attribute " + step.property;
        return w;
      }
      if (!compat(s, cur, it->second)) {
        w.err = what + ": attribute " + step.property + " has domain " + it->second +
                " which does not match " + cur;
        return w;
      }
      w.attrConcept = cur;
      w.ok = true;
      return w;
    }
    auto it = s.objectProperties.find(step.property);
    if (it == s.objectProperties.end()) {
      w.err = what + ": unknown object property " + step.property;
      return w;
    }
    const std::string& from = step.dir == StepDir::Forward ? it->second.domain : it->second.range;
    const std::string& to = step.dir == StepDir::Forward ? it->second.range : it->second.domain;
    if (!compat(s, cur, from)) {
      w.err = what + ": step " + step.property + " expects " + from + " but path is at " + cur;
      return w;
    }
    cur = to;
    if (!last || !endsInAttribute) w.concepts.push_back(cur);
  }
  w.ok = true;
  return w;
}

std::string get_string(const json& j, const char* key, const std::string& id) {
  if (!j.contains(key) || !j[key].is_string())
    throw Error("correspondence " + id + ": missing field '" + key + "'");
  return j[key].get<std::string>();
}

}  // namespace

Alignment parse_alignment(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("alignment document: ") + e.what());
  }
  Alignment a;
  if (doc.contains("prefixes")) {
    for (auto& [k, v] : doc["prefixes"].items()) a.prefixes[k] = v.get<std::string>();
  }
  if (!doc.contains("correspondences") || !doc["correspondences"].is_array())
    throw Error("alignment document: missing 'correspondences' array");

  std::set<std::string> seen;
  for (const auto& j : doc["correspondences"]) {
    Correspondence c;
    c.id = get_string(j, "id", "<unnamed>");
    if (!seen.insert(c.id).second) throw Error("duplicate correspondence id: " + c.id);
    std::string kind = get_string(j, "kind", c.id);
    if (kind == "c2c") {
      c.kind = CorrKind::C2c;
      c.sourceConcept = expand_iri(get_string(j, "source", c.id), a.prefixes);
      c.targetConcept = expand_iri(get_string(j, "target", c.id), a.prefixes);
    } else if (kind == "a2a") {
      c.kind = CorrKind::A2a;
      c.sourceConcept = expand_iri(get_string(j, "sourceConcept", c.id), a.prefixes);
      c.sourcePath = PathExpr::parse(get_string(j, "sourcePath", c.id), a.prefixes);
      c.targetConcept = expand_iri(get_string(j, "targetConcept", c.id), a.prefixes);
      c.targetPath = PathExpr::parse(get_string(j, "targetPath", c.id), a.prefixes);
    } else if (kind == "a2c") {
      // Attribute value matched to a concept instance: rewrite onto rdfs:label.
      c.kind = CorrKind::A2a;
      c.sourceConcept = expand_iri(get_string(j, "sourceConcept", c.id), a.prefixes);
      c.sourcePath = PathExpr::parse(get_string(j, "sourcePath", c.id), a.prefixes);
      c.targetConcept = expand_iri(get_string(j, "target", c.id), a.prefixes);
      c.targetPath.steps = {{vocab::kRdfsLabel, StepDir::Forward}};
    } else if (kind == "r2r") {
      c.kind = CorrKind::R2r;
      auto ends = [&](const char* key) -> std::array<std::string, 2> {
        if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2)
          throw Error("correspondence " + c.id + ": '" + key + "' must be a 2-element array");
        return {expand_iri(j[key][0].get<std::string>(), a.prefixes),
                expand_iri(j[key][1].get<std::string>(), a.prefixes)};
      };
      c.sourceEndpoints = ends("sourceEndpoints");
      c.targetEndpoints = ends("targetEndpoints");
      c.sourcePath = PathExpr::parse(get_string(j, "sourcePath", c.id), a.prefixes);
      c.targetPath = PathExpr::parse(get_string(j, "targetPath", c.id), a.prefixes);
    } else {
      throw Error("correspondence " + c.id + ": unknown kind '" + kind + "'");
    }
    a.correspondences.push_back(std::move(c));
  }
  return a;
}

std::string render_alignment(const Alignment& a) {
  json doc;
  if (!a.prefixes.empty()) {
    json p;
    for (const auto& [k, v] : a.prefixes) p[k] = v;
    doc["prefixes"] = p;
  }
  json arr = json::array();
  auto compactOrIri = [&](const std::string& iri) {
    std::string c = compact_iri(iri, a.prefixes);
    return c;
  };
  for (const auto& c : a.correspondences) {
    json j;
    j["id"] = c.id;
    switch (c.kind) {
      case CorrKind::C2c:
        j["kind"] = "c2c";
        j["source"] = compactOrIri(c.sourceConcept);
        j["target"] = compactOrIri(c.targetConcept);
        break;
      case CorrKind::A2a:
        j["kind"] = "a2a";
        j["sourceConcept"] = compactOrIri(c.sourceConcept);
        j["sourcePath"] = c.sourcePath.render(a.prefixes);
        j["targetConcept"] = compactOrIri(c.targetConcept);
        j["targetPath"] = c.targetPath.render(a.prefixes);
        break;
      case CorrKind::R2r:
        j["kind"] = "r2r";
        j["sourceEndpoints"] = {compactOrIri(c.sourceEndpoints[0]), compactOrIri(c.sourceEndpoints[1])};
        j["sourcePath"] = c.sourcePath.render(a.prefixes);
        j["targetEndpoints"] = {compactOrIri(c.targetEndpoints[0]), compactOrIri(c.targetEndpoints[1])};
        j["targetPath"] = c.targetPath.render(a.prefixes);
        break;
    }
    arr.push_back(std::move(j));
  }
  doc["correspondences"] = std::move(arr);
  return doc.dump(2) + "\n";
}

Alignment load_alignment_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_alignment(buf.str());
}

std::vector<std::string> validate_alignment(const Alignment& a, const Schema& src, const Schema& tgt) {
  std::vector<std::string> report;
  auto checkConcept = [&](const Schema& s, const std::string& c, const std::string& where) {
    if (!s.isConcept(c)) report.push_back(where + ": unknown concept " + c);
  };
  for (const auto& c : a.correspondences) {
    switch (c.kind) {
      case CorrKind::C2c:
        checkConcept(src, c.sourceConcept, c.id + " source");
        checkConcept(tgt, c.targetConcept, c.id + " target");
        break;
      case CorrKind::A2a: {
        Walk ws = walk_path(src, c.sourceConcept, c.sourcePath, true, c.id + " source");
        if (!ws.ok) report.push_back(ws.err);
        Walk wt = walk_path(tgt, c.targetConcept, c.targetPath, true, c.id + " target");
        if (!wt.ok) report.push_back(wt.err);
        break;
      }
      case CorrKind::R2r: {
        Walk ws = walk_path(src, c.sourceEndpoints[0], c.sourcePath, false, c.id + " source");
        if (!ws.ok) report.push_back(ws.err);
        else if (!compat(src, ws.concepts.back(), c.sourceEndpoints[1]))
          report.push_back(c.id + " source: path ends at " + ws.concepts.back() + ", declared endpoint is " +
                           c.sourceEndpoints[1]);
        Walk wt = walk_path(tgt, c.targetEndpoints[0], c.targetPath, false, c.id + " target");
        if (!wt.ok) report.push_back(wt.err);
        else if (!compat(tgt, wt.concepts.back(), c.targetEndpoints[1]))
          report.push_back(c.id + " target: path ends at " + wt.concepts.back() + ", declared endpoint is " +
                           c.targetEndpoints[1]);
        break;
      }
    }
  }
  return report;
}

std::set<std::string> aligned_concepts(const Alignment& a, Side side, const Schema& schema) {
  std::set<std::string> out;
  for (const auto& c : a.correspondences) {
    if (c.kind == CorrKind::C2c) {
      out.insert(side == Side::Source ? c.sourceConcept : c.targetConcept);
    } else if (c.kind == CorrKind::A2a) {
      const std::string& root = side == Side::Source ? c.sourceConcept : c.targetConcept;
      const PathExpr& path = side == Side::Source ? c.sourcePath : c.targetPath;
      Walk w = walk_path(schema, root, path, true, c.id);
      if (w.ok)
        for (const auto& cc : w.concepts) out.insert(cc);
      else
        out.insert(root);
    }
  }
  return out;
}

AlignmentIndex resolve_alignment(const Alignment& a, const Schema& src, const Schema& tgt) {
  auto report = validate_alignment(a, src, tgt);
  if (!report.empty()) {
    std::string msg = "invalid alignment:";
    for (const auto& r : report) msg += "\n  " + r;
    throw Error(msg);
  }
  AlignmentIndex idx;
  idx.prefixes = a.prefixes;
  for (const auto& c : a.correspondences) {
    int corr = static_cast<int>(idx.corrIds.size());
    idx.corrIds.push_back(c.id);
    switch (c.kind) {
      case CorrKind::C2c: {
        idx.c2c.push_back({corr, c.sourceConcept, c.targetConcept});
        idx.c2cPairs.insert({c.sourceConcept, c.targetConcept});
        idx.c2cConcepts[0].insert(c.sourceConcept);
        idx.c2cConcepts[1].insert(c.targetConcept);
        idx.alignedConcepts[0].insert(c.sourceConcept);
        idx.alignedConcepts[1].insert(c.targetConcept);
        break;
      }
      case CorrKind::A2a: {
        A2aEntry e;
        e.corr = corr;
        Walk ws = walk_path(src, c.sourceConcept, c.sourcePath, true, c.id);
        Walk wt = walk_path(tgt, c.targetConcept, c.targetPath, true, c.id);
        e.src = {c.sourceConcept, ws.concepts, c.sourcePath.steps.back().property, ws.attrConcept};
        e.tgt = {c.targetConcept, wt.concepts, c.targetPath.steps.back().property, wt.attrConcept};
        for (const auto& cc : ws.concepts) idx.alignedConcepts[0].insert(cc);
        for (const auto& cc : wt.concepts) idx.alignedConcepts[1].insert(cc);
        int a2aIndex = static_cast<int>(idx.a2a.size());
        for (int s = 0; s < 2; ++s) {
          const A2aSide& sideView = s == 0 ? e.src : e.tgt;
          auto& attrs = idx.alignedAttrs[s][sideView.attrConcept];
          auto it = std::find_if(attrs.begin(), attrs.end(), [&](const AlignedAttr& aa) {
            return aa.attribute == sideView.attribute;
          });
          if (it == attrs.end()) attrs.push_back({sideView.attribute, {a2aIndex}});
          else it->a2aIndexes.push_back(a2aIndex);
        }
        idx.a2a.push_back(std::move(e));
        break;
      }
      case CorrKind::R2r: {
        idx.r2r.push_back({corr, c.sourceEndpoints, c.targetEndpoints, c.sourcePath, c.targetPath});
        break;
      }
    }
  }
  for (int s = 0; s < 2; ++s)
    for (auto& [concept_, attrs] : idx.alignedAttrs[s]) std::sort(attrs.begin(), attrs.end());
  return idx;
}

}  // namespace kbmap
