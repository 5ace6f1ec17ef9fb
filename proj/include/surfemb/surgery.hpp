#pragma once

// Genus-preserving surgery on rotation systems: contraction and vertex
// splitting, edge deletion and insertion inside a face, and subdivision.
// Every operation returns a freshly validated Embedding.

#include <vector>

#include "surfemb/core.hpp"

namespace surfemb {

/// Split `vertex` by moving the `arc_len` consecutive edges starting at
/// position `arc_start` of its normalized rotation onto the original vertex
/// and the rest onto a new vertex n+1, joined by a new edge. `new_edge_id`
/// of 0 means m+1; otherwise existing ids >= new_edge_id shift up by one.
struct SplitSpec {
  VertexId vertex = 1;
  int arc_start = 0;
  int arc_len = 1;
  EdgeId new_edge_id = 0;
};

/// A corner is an occurrence of a vertex on a face walk: position `position`
/// of face `face_index` in trace_faces order, i.e. the angle just before
/// the dart at that position leaves its vertex.
struct CornerRef {
  int face_index = 0;
  int position = 0;

  friend bool operator==(const CornerRef&, const CornerRef&) = default;
};

enum class DeleteMode { genus_preserving, permissive };

struct Deletion {
  Embedding embedding;
  CornerRef corner_u;  // where the deleted edge left its smaller endpoint
  CornerRef corner_v;  // ... and its larger endpoint
};

/// Merges the endpoints of a non-parallel edge. The merged vertex keeps the
/// smaller id; larger vertex ids and edge ids above the removed ones shift
/// down.
Embedding contract_edge(const Embedding& e, EdgeId edge);

Embedding split_vertex(const Embedding& e, const SplitSpec& spec);

/// In genus-preserving mode the two sides of the edge must lie on distinct
/// faces. Permissive mode accepts either case (the result must still be
/// connected). Edge ids above `edge` shift down.
Deletion delete_edge(const Embedding& e, EdgeId edge,
                     DeleteMode mode = DeleteMode::genus_preserving);

/// Inserts an edge across one face between corners at distinct vertices.
/// `new_edge_id` of 0 means m+1. The new edge's dart is placed immediately
/// before the dart at each corner.
Embedding add_edge_in_face(const Embedding& e, CornerRef corner_u, CornerRef corner_v,
                           EdgeId new_edge_id = 0);

/// Inserts a degree-2 vertex n+1 on `edge`: `edge` keeps its smaller
/// endpoint and a new edge m+1 runs from the new vertex to the larger one.
Embedding subdivide_edge(const Embedding& e, EdgeId edge);

/// Every split of every vertex into two contiguous arcs, each bipartition
/// produced once, whose underlying graph is isomorphic to `target`. When
/// `target` has k > 1 more vertices than e the splits are chained k times;
/// intermediate levels are deduplicated by canonical key and pruned to
/// vertex degrees >= target's minimum degree.
std::vector<Embedding> all_splits(const Embedding& e, const MultiGraph& target);

/// The unordered contiguous bipartitions of a degree-d vertex, as SplitSpecs.
std::vector<SplitSpec> vertex_splits(const Embedding& e, VertexId v);

/// Every insertion of one edge inside a face, over unordered pairs of
/// corners at distinct vertices, whose graph is isomorphic to `target`.
std::vector<Embedding> all_edge_additions(const Embedding& e, const MultiGraph& target);

}  // namespace surfemb
