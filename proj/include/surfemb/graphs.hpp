#pragma once

// Constructors for the named graphs used throughout the library. Every
// constructor numbers vertices 1..n and edges 1..m with edges sorted by
// endpoint pair and parallel copies consecutive.

#include <string>
#include <string_view>
#include <vector>

#include "surfemb/core.hpp"

namespace surfemb::graphs {

MultiGraph complete(int n);
MultiGraph complete_bipartite(int m, int n);
/// Two vertices joined by m parallel edges.
MultiGraph theta(int m);
/// Triangle 1-2-3 with multiplicities i on {1,2}, j on {1,3}, k on {2,3}.
MultiGraph triangle_multi(int i, int j, int k);
/// K4 with the edge {1,2} doubled.
MultiGraph k4_plus();
/// Rim cycle 1..n plus hub n+1.
MultiGraph wheel(int n);
/// K5 without the edge {1,2}.
MultiGraph k5_minus_edge();
/// Vertex i adjacent to i +- s (mod n) for each s in the connection set.
MultiGraph circulant(int n, const std::vector<int>& connections);
/// Cycle(n) x K2.
MultiGraph prism(int n);
MultiGraph cube();
MultiGraph octahedron();
MultiGraph petersen();
/// Complement of a simple graph.
MultiGraph complement(const MultiGraph& g);

/// Parses a graph descriptor. Accepted forms (case-insensitive names):
///   K5, K3,3, complete:5, bipartite:3,3, theta:5, triangle:1,2,3, k4plus,
///   wheel:4, k5-uv, circulant:8:1,4, prism:3, cube, octahedron, petersen,
///   complement:<descriptor>
MultiGraph parse_spec(std::string_view spec);

}  // namespace surfemb::graphs
