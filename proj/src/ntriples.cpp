#include "kbmap/ntriples.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace kbmap {

namespace {

struct LineParser {
  std::string_view line;
  std::size_t pos = 0;
  std::size_t lineNo;

  LineParser(std::string_view l, std::size_t n) : line(l), lineNo(n) {}

  [[noreturn]] void fail(const std::string& msg) const { throw NtParseError(lineNo, msg); }

  bool atEnd() const { return pos >= line.size(); }
  char peek() const { return pos < line.size() ? line[pos] : '\0'; }
  char take() {
    if (atEnd()) fail("unexpected end of line");
    return line[pos++];
  }

  void skipWs() {
    while (!atEnd() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }

  void appendUtf8(std::string& out, unsigned long cp) {
    if (cp <= 0x7F) {
      out.push_back(static_cast<char>(cp));
    } else if (cp <= 0x7FF) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0xFFFF) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0x10FFFF) {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      fail("code point out of range in \\U escape");
    }
  }

  unsigned long hex(std::size_t n) {
    unsigned long v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      char c = take();
      v <<= 4;
      if (c >= '0' && c <= '9') v |= static_cast<unsigned long>(c - '0');
      else if (c >= 'a' && c <= 'f') v |= static_cast<unsigned long>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v |= static_cast<unsigned long>(c - 'A' + 10);
      else fail("bad hex digit in escape");
    }
    return v;
  }

  Term parseIri() {
    if (take() != '<') fail("'<' expected");
    std::string out;
    while (true) {
      if (atEnd()) fail("unterminated IRI");
      char c = take();
      if (c == '>') break;
      if (c == '\\') {
        char e = take();
        if (e == 'u') appendUtf8(out, hex(4));
        else if (e == 'U') appendUtf8(out, hex(8));
        else fail("invalid escape in IRI");
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '"' || c == '{' || c == '}' || c == '|' ||
          c == '^' || c == '`' || c == '<')
        fail("illegal character in IRI");
      out.push_back(c);
    }
    if (out.empty()) fail("empty IRI");
    // Absolute IRIs start with scheme ':'; relative references are rejected.
    std::size_t i = 0;
    if (!std::isalpha(static_cast<unsigned char>(out[0]))) fail("non-absolute IRI: " + out);
    while (i < out.size() && (std::isalnum(static_cast<unsigned char>(out[i])) || out[i] == '+' ||
                              out[i] == '-' || out[i] == '.'))
      ++i;
    if (i >= out.size() || out[i] != ':') fail("non-absolute IRI: " + out);
    return Term::iri(out);
  }

  Term parseBlank() {
    if (take() != '_' || take() != ':') fail("'_:' expected");
    std::string label;
    while (!atEnd()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.') {
        label.push_back(c);
        ++pos;
      } else {
        break;
      }
    }
    if (label.empty()) fail("empty blank node label");
    if (label.back() == '.') {   // trailing dot belongs to the statement
      label.pop_back();
      --pos;
      if (label.empty()) fail("empty blank node label");
    }
    return Term::blank(label);
  }

  Term parseLiteral() {
    if (take() != '"') fail("'\"' expected");
    std::string lex;
    while (true) {
      if (atEnd()) fail("unterminated literal");
      char c = take();
      if (c == '"') break;
      if (c == '\\') {
        char e = take();
        switch (e) {
          case 't': lex.push_back('\t'); break;
          case 'b': lex.push_back('\b'); break;
          case 'n': lex.push_back('\n'); break;
          case 'r': lex.push_back('\r'); break;
          case 'f': lex.push_back('\f'); break;
          case '"': lex.push_back('"'); break;
          case '\'': lex.push_back('\''); break;
          case '\\': lex.push_back('\\'); break;
          case 'u': appendUtf8(lex, hex(4)); break;
          case 'U': appendUtf8(lex, hex(8)); break;
          default: fail("malformed literal: invalid escape");
        }
        continue;
      }
      lex.push_back(c);
    }
    std::string datatype, lang;
    if (peek() == '^') {
      take();
      if (take() != '^') fail("malformed literal: '^^' expected");
      Term dt = parseIri();
      datatype = dt.value;
    } else if (peek() == '@') {
      take();
      while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) lang.push_back(take());
      if (lang.empty()) fail("malformed literal: empty language tag");
    }
    return Term::literal(lex, datatype, lang);
  }

  Term parseSubject() {
    skipWs();
    if (peek() == '<') return parseIri();
    if (peek() == '_') return parseBlank();
    fail("subject must be an IRI or blank node");
  }

  Term parsePredicate() {
    skipWs();
    if (peek() == '<') return parseIri();
    fail("predicate must be an IRI");
  }

  Term parseObject() {
    skipWs();
    if (peek() == '<') return parseIri();
    if (peek() == '_') return parseBlank();
    if (peek() == '"') return parseLiteral();
    fail("object must be an IRI, blank node, or literal");
  }

  void parseDot() {
    skipWs();
    if (atEnd() || take() != '.') fail("'.' expected at end of triple");
    skipWs();
    if (!atEnd() && peek() != '#') fail("trailing characters after '.'");
  }
};

void escapeInto(std::string& out, const std::string& s, bool iri) {
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '"':
        if (iri) out.push_back(c);
        else out += "\\\"";
        break;
      default: out.push_back(c);
    }
  }
}

}  // namespace

std::string render_term_nt(const Term& t) {
  std::string out;
  switch (t.kind) {
    case TermKind::Iri:
      out.push_back('<');
      escapeInto(out, t.value, true);
      out.push_back('>');
      break;
    case TermKind::Blank:
      out += "_:";
      out += t.value;
      break;
    case TermKind::Literal:
      out.push_back('"');
      escapeInto(out, t.value, false);
      out.push_back('"');
      if (!t.datatype.empty()) {
        out += "^^<";
        out += t.datatype;
        out.push_back('>');
      } else if (!t.lang.empty()) {
        out.push_back('@');
        out += t.lang;
      }
      break;
  }
  return out;
}

Graph parse_ntriples(std::string_view text) {
  Graph g;
  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = (end == std::string_view::npos) ? text.substr(start) : text.substr(start, end - start);
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineParser p(line, lineNo);
    p.skipWs();
    if (!p.atEnd() && p.peek() != '#') {
      Term s = p.parseSubject();
      Term pr = p.parsePredicate();
      Term o = p.parseObject();
      p.parseDot();
      g.insert(std::move(s), std::move(pr), std::move(o));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return g;
}

std::string serialize_ntriples(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const auto& t : g.triples) {
    lines.push_back(render_term_nt(t.subject) + " " + render_term_nt(t.predicate) + " " +
                    render_term_nt(t.object) + " .");
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out.push_back('\n');
  }
  return out;
}

Graph load_ntriples_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ntriples(buf.str());
}

void save_ntriples_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << serialize_ntriples(g);
}

}  // namespace kbmap
