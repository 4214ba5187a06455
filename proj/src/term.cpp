#include "kbmap/term.hpp"

namespace kbmap {

Term Term::iri(std::string v) {
  Term t;
  t.kind = TermKind::Iri;
  t.value = std::move(v);
  if (t.value.empty()) throw Error("IRI must be non-empty");
  for (char c : t.value) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') throw Error("IRI contains whitespace: " + t.value);
  }
  return t;
}

Term Term::blank(std::string label) {
  if (label.empty()) throw Error("blank node label must be non-empty");
  Term t;
  t.kind = TermKind::Blank;
  t.value = std::move(label);
  return t;
}

Term Term::literal(std::string lexical, std::string datatype, std::string lang) {
  Term t;
  t.kind = TermKind::Literal;
  t.value = std::move(lexical);
  t.datatype = std::move(datatype);
  t.lang = std::move(lang);
  return t;
}

std::string local_name(const std::string& iri) {
  auto pos = iri.find_last_of("#/");
  if (pos == std::string::npos || pos + 1 >= iri.size()) return iri;
  return iri.substr(pos + 1);
}

std::string compact_iri(const std::string& iri, const std::map<std::string, std::string>& prefixes) {
  for (const auto& [name, base] : prefixes) {
    if (iri.size() > base.size() && iri.compare(0, base.size(), base) == 0) {
      std::string rest = iri.substr(base.size());
      if (rest.find('/') == std::string::npos && rest.find('#') == std::string::npos)
        return name + ":" + rest;
    }
  }
  return "<" + iri + ">";
}

}  // namespace kbmap
