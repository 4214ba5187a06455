#include "kbmap/path_expr.hpp"

namespace kbmap {

std::string expand_iri(const std::string& text, const std::map<std::string, std::string>& prefixes) {
  if (text.empty()) throw Error("empty IRI reference");
  if (text.front() == '<') {
    if (text.back() != '>' || text.size() < 3) throw Error("malformed IRI reference: " + text);
    return text.substr(1, text.size() - 2);
  }
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("expected prefixed name or <iri>: " + text);
  std::string pfx = text.substr(0, colon);
  auto it = prefixes.find(pfx);
  if (it == prefixes.end()) {
    // Treat scheme-like references (e.g. "urn:x") as full IRIs.
    return text;
  }
  return it->second + text.substr(colon + 1);
}

PathExpr PathExpr::parse(const std::string& text, const std::map<std::string, std::string>& prefixes) {
  PathExpr out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto slash = text.find('/', start);
    std::string step = (slash == std::string::npos) ? text.substr(start) : text.substr(start, slash - start);
    if (step.empty()) throw Error("malformed path expression: " + text);
    StepDir dir = StepDir::Forward;
    if (step.front() == '^') {
      dir = StepDir::Inverse;
      step.erase(step.begin());
      if (step.empty()) throw Error("malformed path expression: " + text);
    }
    out.steps.push_back({expand_iri(step, prefixes), dir});
    if (slash == std::string::npos) break;
    start = slash + 1;
  }
  if (out.steps.empty()) throw Error("empty path expression");
  return out;
}

std::string PathExpr::render(const std::map<std::string, std::string>& prefixes) const {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out.push_back('/');
    if (steps[i].dir == StepDir::Inverse) out.push_back('^');
    std::string c = compact_iri(steps[i].property, prefixes);
    out += c;
  }
  return out;
}

}  // namespace kbmap
