#include "surfemb/surgery.hpp"

#include <algorithm>
#include <set>

#include "surfemb/canon.hpp"
#include "surfemb/error.hpp"

namespace surfemb {

namespace {

using Rotations = std::vector<std::vector<EdgeId>>;

EdgeId resolve_new_id(EdgeId requested, int edge_count) {
  if (requested == 0) return edge_count + 1;
  if (requested < 1 || requested > edge_count + 1) {
    throw InvalidInput("new edge id " + std::to_string(requested) + " out of range 1.." +
                       std::to_string(edge_count + 1));
  }
  return requested;
}

Embedding assemble(int n, std::vector<Edge> edges, Rotations rots) {
  return Embedding(MultiGraph(n, std::move(edges)), std::move(rots));
}

std::size_t position_of(std::span<const EdgeId> rot, EdgeId id) {
  return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), id) - rot.begin());
}

CornerRef locate(const FaceSet& faces, Dart d) {
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    const auto& darts = faces.faces[f].darts;
    for (std::size_t p = 0; p < darts.size(); ++p) {
      if (darts[p] == d) return {static_cast<int>(f), static_cast<int>(p)};
    }
  }
  throw std::logic_error("dart missing from face set");
}

}  // namespace

Embedding contract_edge(const Embedding& e, EdgeId edge) {
  const Edge target = e.graph().edge(edge);
  const VertexId u = target.u, v = target.v;
  if (e.graph().multiplicity(u, v) > 1) {
    throw InvalidInput("contracting edge " + std::to_string(edge) +
                       " would create a loop (it has a parallel copy)");
  }
  auto vmap = [&](VertexId w) { return w < v ? w : (w == v ? u : w - 1); };
  auto emap = [&](EdgeId k) { return k < edge ? k : k - 1; };

  std::vector<Edge> edges;
  for (const Edge& x : e.graph().edges()) {
    if (x.id == edge) continue;
    edges.push_back({emap(x.id), vmap(x.u), vmap(x.v)});
  }

  std::vector<EdgeId> merged;
  for (VertexId side : {u, v}) {
    auto rot = e.rotation(side);
    const std::size_t at = position_of(rot, edge);
    for (std::size_t i = 1; i < rot.size(); ++i) merged.push_back(emap(rot[(at + i) % rot.size()]));
  }

  Rotations rots(static_cast<std::size_t>(e.vertex_count() - 1));
  for (VertexId w = 1; w <= e.vertex_count(); ++w) {
    if (w == v) continue;
    auto& out = rots[static_cast<std::size_t>(vmap(w) - 1)];
    if (w == u) {
      out = merged;
    } else {
      for (EdgeId k : e.rotation(w)) out.push_back(emap(k));
    }
  }
  return assemble(e.vertex_count() - 1, std::move(edges), std::move(rots));
}

Embedding split_vertex(const Embedding& e, const SplitSpec& spec) {
  auto rot = e.rotation(spec.vertex);
  const int d = static_cast<int>(rot.size());
  if (spec.arc_len < 1 || spec.arc_len > d - 1) {
    throw InvalidInput("arc length " + std::to_string(spec.arc_len) +
                       " must lie in 1.." + std::to_string(d - 1));
  }
  if (spec.arc_start < 0 || spec.arc_start >= d) {
    throw InvalidInput("arc start " + std::to_string(spec.arc_start) + " out of range");
  }
  const int m = e.edge_count();
  const int n = e.vertex_count();
  const EdgeId fresh = resolve_new_id(spec.new_edge_id, m);
  const VertexId added = n + 1;
  auto emap = [&](EdgeId k) { return k < fresh ? k : k + 1; };

  std::vector<EdgeId> arc, rest;
  for (int i = 0; i < d; ++i) {
    const EdgeId k = rot[static_cast<std::size_t>((spec.arc_start + i) % d)];
    (i < spec.arc_len ? arc : rest).push_back(k);
  }
  std::set<EdgeId> moved(rest.begin(), rest.end());

  std::vector<Edge> edges;
  for (const Edge& x : e.graph().edges()) {
    Edge y{emap(x.id), x.u, x.v};
    if (moved.count(x.id)) {
      if (y.u == spec.vertex) y.u = added;
      if (y.v == spec.vertex) y.v = added;
    }
    edges.push_back(y);
  }
  edges.push_back({fresh, spec.vertex, added});

  Rotations rots(static_cast<std::size_t>(n + 1));
  for (VertexId w = 1; w <= n; ++w) {
    auto& out = rots[static_cast<std::size_t>(w - 1)];
    if (w == spec.vertex) {
      for (EdgeId k : arc) out.push_back(emap(k));
      out.push_back(fresh);
    } else {
      for (EdgeId k : e.rotation(w)) out.push_back(emap(k));
    }
  }
  auto& tail = rots[static_cast<std::size_t>(n)];
  for (EdgeId k : rest) tail.push_back(emap(k));
  tail.push_back(fresh);
  return assemble(n + 1, std::move(edges), std::move(rots));
}

Deletion delete_edge(const Embedding& e, EdgeId edge, DeleteMode mode) {
  const Edge target = e.graph().edge(edge);
  const Dart du{edge, End::first}, dv{edge, End::second};
  if (mode == DeleteMode::genus_preserving) {
    const FaceSet faces = trace_faces(e);
    if (locate(faces, du).face_index == locate(faces, dv).face_index) {
      throw InvalidInput("both sides of edge " + std::to_string(edge) +
                         " lie on one face; deleting it would change the genus");
    }
  }
  auto emap = [&](EdgeId k) { return k < edge ? k : k - 1; };
  // The corner left behind is just before the old successor dart.
  const EdgeId next_u = e.successor(du).edge;
  const EdgeId next_v = e.successor(dv).edge;
  if (next_u == edge || next_v == edge) {
    throw InvalidInput("deleting edge " + std::to_string(edge) + " would isolate a vertex");
  }

  std::vector<Edge> edges;
  for (const Edge& x : e.graph().edges()) {
    if (x.id != edge) edges.push_back({emap(x.id), x.u, x.v});
  }
  Rotations rots;
  for (VertexId w = 1; w <= e.vertex_count(); ++w) {
    std::vector<EdgeId> out;
    for (EdgeId k : e.rotation(w))
      if (k != edge) out.push_back(emap(k));
    rots.push_back(std::move(out));
  }
  Embedding result = assemble(e.vertex_count(), std::move(edges), std::move(rots));
  const FaceSet faces = trace_faces(result);
  const CornerRef cu = locate(faces, result.graph().dart_at(target.u, emap(next_u)));
  const CornerRef cv = locate(faces, result.graph().dart_at(target.v, emap(next_v)));
  return Deletion{std::move(result), cu, cv};
}

Embedding add_edge_in_face(const Embedding& e, CornerRef corner_u, CornerRef corner_v,
                           EdgeId new_edge_id) {
  const FaceSet faces = trace_faces(e);
  auto dart_of = [&](const CornerRef& c) {
    if (c.face_index < 0 || c.face_index >= static_cast<int>(faces.faces.size())) {
      throw InvalidInput("face index " + std::to_string(c.face_index) + " out of range");
    }
    const auto& darts = faces.faces[static_cast<std::size_t>(c.face_index)].darts;
    if (c.position < 0 || c.position >= static_cast<int>(darts.size())) {
      throw InvalidInput("corner position " + std::to_string(c.position) + " out of range");
    }
    return darts[static_cast<std::size_t>(c.position)];
  };
  const Dart a = dart_of(corner_u), b = dart_of(corner_v);
  if (corner_u.face_index != corner_v.face_index) {
    throw InvalidInput("corners lie on different faces");
  }
  const VertexId w = e.vertex_of(a), z = e.vertex_of(b);
  if (w == z) throw InvalidInput("corners sit at the same vertex; the edge would be a loop");

  const EdgeId fresh = resolve_new_id(new_edge_id, e.edge_count());
  auto emap = [&](EdgeId k) { return k < fresh ? k : k + 1; };

  std::vector<Edge> edges;
  for (const Edge& x : e.graph().edges()) edges.push_back({emap(x.id), x.u, x.v});
  edges.push_back({fresh, w, z});

  Rotations rots;
  for (VertexId x = 1; x <= e.vertex_count(); ++x) {
    std::vector<EdgeId> out;
    for (EdgeId k : e.rotation(x)) {
      if ((x == w && k == a.edge) || (x == z && k == b.edge)) out.push_back(fresh);
      out.push_back(emap(k));
    }
    rots.push_back(std::move(out));
  }
  return assemble(e.vertex_count(), std::move(edges), std::move(rots));
}

Embedding subdivide_edge(const Embedding& e, EdgeId edge) {
  const Edge target = e.graph().edge(edge);
  const int n = e.vertex_count();
  const int m = e.edge_count();
  const VertexId mid = n + 1;
  const EdgeId fresh = m + 1;

  std::vector<Edge> edges;
  for (const Edge& x : e.graph().edges()) {
    edges.push_back(x.id == edge ? Edge{edge, target.u, mid} : x);
  }
  edges.push_back({fresh, mid, target.v});

  Rotations rots = e.rotations();
  for (EdgeId& k : rots[static_cast<std::size_t>(target.v - 1)])
    if (k == edge) k = fresh;
  rots.push_back({edge, fresh});
  return assemble(n + 1, std::move(edges), std::move(rots));
}

std::vector<SplitSpec> vertex_splits(const Embedding& e, VertexId v) {
  const int d = static_cast<int>(e.rotation(v).size());
  std::vector<SplitSpec> out;
  for (int len = 1; len < d; ++len) {
    const int other = d - len;
    if (len > other) break;
    const int starts = len == other ? len : d;
    for (int s = 0; s < starts; ++s) out.push_back({v, s, len, 0});
  }
  return out;
}

std::vector<Embedding> all_splits(const Embedding& e, const MultiGraph& target) {
  const int steps = target.vertex_count() - e.vertex_count();
  if (steps < 1 || target.edge_count() != e.edge_count() + steps) return {};
  const int min_degree = target.min_degree();

  std::vector<Embedding> level{e};
  for (int step = 1; step <= steps; ++step) {
    const bool last = step == steps;
    std::vector<Embedding> next;
    std::set<std::string> seen;
    for (const Embedding& cur : level) {
      for (VertexId v = 1; v <= cur.vertex_count(); ++v) {
        const int d = static_cast<int>(cur.rotation(v).size());
        for (const SplitSpec& spec : vertex_splits(cur, v)) {
          if (spec.arc_len + 1 < min_degree || d - spec.arc_len + 1 < min_degree) continue;
          Embedding split = split_vertex(cur, spec);
          if (last) {
            if (graphs_isomorphic(split.graph(), target)) next.push_back(std::move(split));
          } else if (seen.insert(canonical_key(split)).second) {
            next.push_back(std::move(split));
          }
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Embedding> all_edge_additions(const Embedding& e, const MultiGraph& target) {
  std::vector<Embedding> out;
  if (target.vertex_count() != e.vertex_count() || target.edge_count() != e.edge_count() + 1)
    return out;
  const FaceSet faces = trace_faces(e);
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    const auto& darts = faces.faces[f].darts;
    for (std::size_t p = 0; p < darts.size(); ++p) {
      for (std::size_t q = p + 1; q < darts.size(); ++q) {
        if (e.vertex_of(darts[p]) == e.vertex_of(darts[q])) continue;
        Embedding added = add_edge_in_face(e, {static_cast<int>(f), static_cast<int>(p)},
                                           {static_cast<int>(f), static_cast<int>(q)});
        if (graphs_isomorphic(added.graph(), target)) out.push_back(std::move(added));
      }
    }
  }
  return out;
}

}  // namespace surfemb
