#pragma once

// Loopless multigraphs, rotation systems, face tracing and Euler genus.
//
// Vertices and edges are numbered from 1. A dart is one end of an edge; the
// dart (e, first) sits at the smaller endpoint of e, (e, second) at the larger.
// Because loops are excluded an edge meets a vertex at most once, so a vertex
// rotation can be stored as a cyclic list of edge ids.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace surfemb {

using VertexId = int;
using EdgeId = int;

enum class End : std::uint8_t { first = 0, second = 1 };

struct Dart {
  EdgeId edge = 1;
  End end = End::first;

  constexpr int index() const noexcept {
    return 2 * (edge - 1) + static_cast<int>(end);
  }
  static constexpr Dart from_index(int i) noexcept {
    return Dart{i / 2 + 1, static_cast<End>(i % 2)};
  }
  constexpr Dart partner() const noexcept {
    return Dart{edge, end == End::first ? End::second : End::first};
  }

  friend constexpr auto operator<=>(const Dart&, const Dart&) = default;
};

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class MultiGraph {
 public:
  /// Edges may be listed in any order but their ids must be exactly 1..m.
  /// Endpoints are stored with u < v. Throws InvalidInput on loops, bad
  /// endpoints or non-contiguous ids.
  MultiGraph(int vertex_count, std::vector<Edge> edges);

  /// Edge i+1 joins pairs[i].
  static MultiGraph from_pairs(int vertex_count,
                               const std::vector<std::pair<VertexId, VertexId>>& pairs);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int dart_count() const noexcept { return 2 * edge_count(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const;

  VertexId vertex_of(Dart d) const noexcept {
    const Edge& e = edges_[static_cast<std::size_t>(d.edge - 1)];
    return d.end == End::first ? e.u : e.v;
  }
  /// The dart of `edge` at `v`; throws if `edge` is not incident to `v`.
  Dart dart_at(VertexId v, EdgeId edge) const;

  int degree(VertexId v) const;
  /// Incident edge ids in increasing order.
  const std::vector<EdgeId>& incident_edges(VertexId v) const;
  int multiplicity(VertexId a, VertexId b) const;
  bool is_connected() const;
  bool is_simple() const;
  int min_degree() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  void check_vertex(VertexId v) const;

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// A vertex bijection and an edge bijection; entry i is the image of i+1.
struct Relabeling {
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

/// A connected loopless multigraph together with a rotation system. Each
/// rotation is normalized so that its least dart (equivalently, least edge
/// id) comes first, so equality is equality of embeddings.
class Embedding {
 public:
  /// rotations[v-1] is the cyclic order of edge ids around vertex v.
  Embedding(MultiGraph graph, std::vector<std::vector<EdgeId>> rotations);

  /// Same, with rotations given as darts; each dart must sit at its vertex.
  static Embedding from_darts(MultiGraph graph,
                              const std::vector<std::vector<Dart>>& rotations);

  const MultiGraph& graph() const noexcept { return graph_; }
  int vertex_count() const noexcept { return graph_.vertex_count(); }
  int edge_count() const noexcept { return graph_.edge_count(); }

  std::span<const EdgeId> rotation(VertexId v) const;
  const std::vector<std::vector<EdgeId>>& rotations() const noexcept {
    return rotations_;
  }

  Dart successor(Dart d) const noexcept {
    return Dart::from_index(succ_[static_cast<std::size_t>(d.index())]);
  }
  Dart predecessor(Dart d) const noexcept {
    return Dart::from_index(pred_[static_cast<std::size_t>(d.index())]);
  }
  VertexId vertex_of(Dart d) const noexcept { return graph_.vertex_of(d); }

  /// Successor table indexed by dart index; exposed for tight loops.
  std::span<const int> successor_table() const noexcept { return succ_; }

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.graph_ == b.graph_ && a.rotations_ == b.rotations_;
  }

 private:
  MultiGraph graph_;
  std::vector<std::vector<EdgeId>> rotations_;
  std::vector<int> succ_;
  std::vector<int> pred_;
};

struct SurfaceStats {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;

  int euler_characteristic() const noexcept { return vertices - edges + faces; }
  friend bool operator==(const SurfaceStats&, const SurfaceStats&) = default;
};

/// A boundary walk: d[i+1] = successor(partner(d[i])), cyclically.
struct Face {
  std::vector<Dart> darts;

  std::size_t length() const noexcept { return darts.size(); }
  friend bool operator==(const Face&, const Face&) = default;
};

struct FaceSet {
  std::vector<Face> faces;  // each starts at its least dart; sorted by that dart
  SurfaceStats stats;
};

/// Orbits of d -> successor(partner(d)). The single-vertex edgeless graph
/// has no darts; it is reported with zero face walks and stats.faces = 1.
FaceSet trace_faces(const Embedding& e);
SurfaceStats surface_stats(const Embedding& e);
int face_count(const Embedding& e);
/// Sorted face lengths.
std::vector<int> face_degrees(const Embedding& e);

/// Mirror image: every rotation reversed.
Embedding reverse(const Embedding& e);

/// Applies a vertex/edge relabeling; throws if it is not a bijection pair.
Embedding relabel(const Embedding& e, const Relabeling& r);
MultiGraph relabel(const MultiGraph& g, const Relabeling& r);

std::string to_string(const Embedding& e);

}  // namespace surfemb
