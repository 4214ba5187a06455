#pragma once

#include <string>

#include "kbmap/schema.hpp"
#include "kbmap/term.hpp"

namespace kbmap {

// A knowledge base: schema layer plus (possibly empty) instance triples.
struct Kb {
  Schema schema;
  Graph instances;
};

// Splits a graph into schema and instance layers and validates that every
// rdf:type assertion in the instance layer names a schema concept.
Kb kb_from_graph(const Graph& g);

Kb load_kb_file(const std::string& path);

// Renders schema plus instances back into one graph.
Graph kb_to_graph(const Kb& kb);

// The unique asserted type of `individual` with no asserted subtype.
// Throws Error when the individual has no type or several incomparable
// most-specific types.
std::string most_specific_type(const Kb& kb, const std::string& individual);

}  // namespace kbmap
