#ifndef SYMBREAK_SPECPARSE_HPP
#define SYMBREAK_SPECPARSE_HPP

#include "symbreak/graph.hpp"
#include "symbreak/product.hpp"

#include <optional>
#include <string>
#include <variant>

namespace symbreak {

// Graph sources accepted on the command line:
//   families      path:4  cycle:6  complete:5  kbipartite:3,3  hypercube:4  grid:4x5
//   files         file:edges.el  (edge-list text format)
//   products      factor specs joined by " x ", left to right: "path:4 x path:5"
// A product expression keeps its factorization; plain specs are bare graphs.
using ParsedGraph = std::variant<Graph, ProductGraph>;

ParsedGraph parse_graph_spec(const std::string& text);

// The underlying graph regardless of flavor.
const Graph& graph_of(const ParsedGraph& pg);

// Set when the spec was a product expression.
const ProductGraph* product_of(const ParsedGraph& pg);

FamilySpec parse_family(const std::string& text);

} // namespace symbreak

#endif
