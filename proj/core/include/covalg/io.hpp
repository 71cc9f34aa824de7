#pragma once

#include "covalg/graph.hpp"
#include "covalg/lattice.hpp"
#include "covalg/toric.hpp"

#include <span>
#include <string>
#include <string_view>

namespace covalg {

// {"n": <int>, "edges": [[i, j], ...]}, 1-based, [i, j] the edge {x_i, y_j}.
// Duplicate edges are dropped. Throws ParseError on malformed input, an index
// outside 1..n, n < 1, or a document that declares itself a multigraph.
BipartiteGraph parse_graph(std::string_view text);
BipartiteGraph read_graph_file(const std::string& path);

// Edges sorted lexicographically.
std::string graph_to_json(const BipartiteGraph& g);

// {"n": int, "elements": [[indices...], ...]} in canonical order.
std::string lattice_to_json(const CoverLattice& lattice);

// {"n", "variables", "u_order", "binomials": [{"lead": {...}, "trail": {...}}]}
// with monomials written as variable -> exponent objects.
std::string groebner_to_json(const ToricRing& ring, std::span<const Binomial> basis);

}  // namespace covalg
