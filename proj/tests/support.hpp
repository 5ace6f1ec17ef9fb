#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "surfemb/core.hpp"
#include "surfemb/graphs.hpp"

namespace testing {

using namespace surfemb;

inline Embedding random_rotation(const MultiGraph& g, std::mt19937& rng) {
  std::vector<std::vector<EdgeId>> rots;
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    auto r = g.incident_edges(v);
    std::shuffle(r.begin(), r.end(), rng);
    rots.push_back(r);
  }
  return Embedding(g, rots);
}

inline const std::vector<MultiGraph>& sample_graphs() {
  static const std::vector<MultiGraph> graphs{
      graphs::theta(5),        graphs::triangle_multi(1, 2, 3), graphs::k4_plus(),
      graphs::wheel(4),        graphs::complete(5),            graphs::complete_bipartite(3, 3),
      graphs::k5_minus_edge(), graphs::prism(3),               graphs::cube(),
      graphs::petersen(),      graphs::theta(3),               graphs::triangle_multi(2, 2, 1)};
  return graphs;
}

inline Embedding random_embedding(std::mt19937& rng) {
  const auto& gs = sample_graphs();
  std::uniform_int_distribution<std::size_t> pick(0, gs.size() - 1);
  return random_rotation(gs[pick(rng)], rng);
}

inline Relabeling random_relabeling(int n, int m, std::mt19937& rng) {
  Relabeling r;
  r.vertex_map.resize(static_cast<std::size_t>(n));
  r.edge_map.resize(static_cast<std::size_t>(m));
  std::iota(r.vertex_map.begin(), r.vertex_map.end(), 1);
  std::iota(r.edge_map.begin(), r.edge_map.end(), 1);
  std::shuffle(r.vertex_map.begin(), r.vertex_map.end(), rng);
  std::shuffle(r.edge_map.begin(), r.edge_map.end(), rng);
  return r;
}

}  // namespace testing
