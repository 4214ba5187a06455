#pragma once

#include <map>
#include <string>
#include <vector>

#include "kbmap/term.hpp"

namespace kbmap {

enum class StepDir { Forward, Inverse };

struct PathStep {
  std::string property;  // full IRI
  StepDir dir = StepDir::Forward;
  auto operator<=>(const PathStep&) const = default;
};

// Property path restricted to sequence '/' and inverse '^'.
struct PathExpr {
  std::vector<PathStep> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }

  std::string render(const std::map<std::string, std::string>& prefixes = {}) const;

  // Parses "a/b/^c" where each step is a prefixed name or <iri>.
  static PathExpr parse(const std::string& text, const std::map<std::string, std::string>& prefixes);

  auto operator<=>(const PathExpr&) const = default;
};

// Expands "pfx:local" or "<iri>" to a full IRI using the prefix table.
std::string expand_iri(const std::string& text, const std::map<std::string, std::string>& prefixes);

}  // namespace kbmap
