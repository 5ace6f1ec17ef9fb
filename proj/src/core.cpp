#include "surfemb/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "surfemb/error.hpp"

namespace surfemb {

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw InvalidInput("graph needs at least one vertex");
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  incidence_.assign(static_cast<std::size_t>(vertex_count_), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.id != static_cast<EdgeId>(i + 1)) {
      throw InvalidInput("edge ids must be distinct and contiguous from 1 (found " +
                         std::to_string(e.id) + ")");
    }
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) {
      throw InvalidInput("edge " + std::to_string(e.id) + " is a loop at vertex " +
                         std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    incidence_[static_cast<std::size_t>(e.u - 1)].push_back(e.id);
    incidence_[static_cast<std::size_t>(e.v - 1)].push_back(e.id);
  }
}

MultiGraph MultiGraph::from_pairs(int vertex_count,
                                  const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    edges.push_back({static_cast<EdgeId>(i + 1), pairs[i].first, pairs[i].second});
  }
  return MultiGraph(vertex_count, std::move(edges));
}

void MultiGraph::check_vertex(VertexId v) const {
  if (v < 1 || v > vertex_count_) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range 1.." +
                       std::to_string(vertex_count_));
  }
}

const Edge& MultiGraph::edge(EdgeId id) const {
  if (id < 1 || id > edge_count()) {
    throw InvalidInput("edge " + std::to_string(id) + " out of range");
  }
  return edges_[static_cast<std::size_t>(id - 1)];
}

Dart MultiGraph::dart_at(VertexId v, EdgeId id) const {
  const Edge& e = edge(id);
  if (e.u == v) return Dart{id, End::first};
  if (e.v == v) return Dart{id, End::second};
  throw InvalidInput("edge " + std::to_string(id) + " is not incident to vertex " +
                     std::to_string(v));
}

int MultiGraph::degree(VertexId v) const {
  return static_cast<int>(incident_edges(v).size());
}

const std::vector<EdgeId>& MultiGraph::incident_edges(VertexId v) const {
  check_vertex(v);
  return incidence_[static_cast<std::size_t>(v - 1)];
}

int MultiGraph::multiplicity(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  int count = 0;
  for (EdgeId id : incident_edges(a)) {
    const Edge& e = edges_[static_cast<std::size_t>(id - 1)];
    if (e.u == a && e.v == b) ++count;
  }
  return count;
}

bool MultiGraph::is_connected() const {
  std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
  std::vector<VertexId> stack{1};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId id : incidence_[static_cast<std::size_t>(v - 1)]) {
      const Edge& e = edges_[static_cast<std::size_t>(id - 1)];
      VertexId w = e.u == v ? e.v : e.u;
      if (!seen[static_cast<std::size_t>(w - 1)]) {
        seen[static_cast<std::size_t>(w - 1)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

bool MultiGraph::is_simple() const {
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (edges_[i].u == edges_[j].u && edges_[i].v == edges_[j].v) return false;
    }
  }
  return true;
}

int MultiGraph::min_degree() const {
  int best = edge_count() * 2;
  for (const auto& inc : incidence_) best = std::min(best, static_cast<int>(inc.size()));
  return best;
}

Embedding::Embedding(MultiGraph graph, std::vector<std::vector<EdgeId>> rotations)
    : graph_(std::move(graph)), rotations_(std::move(rotations)) {
  const int n = graph_.vertex_count();
  if (static_cast<int>(rotations_.size()) != n) {
    throw InvalidInput("rotation system lists " + std::to_string(rotations_.size()) +
                       " vertices, graph has " + std::to_string(n));
  }
  if (!graph_.is_connected()) {
    throw InvalidInput("rotation systems are only defined here for connected graphs");
  }
  succ_.assign(static_cast<std::size_t>(graph_.dart_count()), -1);
  pred_.assign(succ_.size(), -1);
  for (VertexId v = 1; v <= n; ++v) {
    auto& rot = rotations_[static_cast<std::size_t>(v - 1)];
    std::vector<EdgeId> expected = graph_.incident_edges(v);
    std::vector<EdgeId> given = rot;
    std::sort(given.begin(), given.end());
    if (given != expected) {
      std::ostringstream msg;
      msg << "rotation of vertex " << v << " must list exactly its incident edges {";
      for (std::size_t i = 0; i < expected.size(); ++i) msg << (i ? "," : "") << expected[i];
      msg << "} once each";
      throw InvalidInput(msg.str());
    }
    if (rot.empty()) continue;
    std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
    for (std::size_t i = 0; i < rot.size(); ++i) {
      int a = graph_.dart_at(v, rot[i]).index();
      int b = graph_.dart_at(v, rot[(i + 1) % rot.size()]).index();
      succ_[static_cast<std::size_t>(a)] = b;
      pred_[static_cast<std::size_t>(b)] = a;
    }
  }
}

Embedding Embedding::from_darts(MultiGraph graph,
                                const std::vector<std::vector<Dart>>& rotations) {
  std::vector<std::vector<EdgeId>> by_edge(rotations.size());
  for (std::size_t i = 0; i < rotations.size(); ++i) {
    const VertexId v = static_cast<VertexId>(i + 1);
    for (Dart d : rotations[i]) {
      if (d.edge < 1 || d.edge > graph.edge_count()) {
        throw InvalidInput("dart of unknown edge " + std::to_string(d.edge));
      }
      if (graph.vertex_of(d) != v) {
        throw InvalidInput("dart of edge " + std::to_string(d.edge) +
                           " listed at vertex " + std::to_string(v) +
                           " but sits at vertex " + std::to_string(graph.vertex_of(d)));
      }
      by_edge[i].push_back(d.edge);
    }
  }
  return Embedding(std::move(graph), std::move(by_edge));
}

std::span<const EdgeId> Embedding::rotation(VertexId v) const {
  if (v < 1 || v > vertex_count()) throw InvalidInput("vertex out of range");
  return rotations_[static_cast<std::size_t>(v - 1)];
}

FaceSet trace_faces(const Embedding& e) {
  FaceSet out;
  const auto succ = e.successor_table();
  const int darts = e.graph().dart_count();
  std::vector<char> seen(static_cast<std::size_t>(darts), 0);
  for (int start = 0; start < darts; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Face face;
    int d = start;
    do {
      seen[static_cast<std::size_t>(d)] = 1;
      face.darts.push_back(Dart::from_index(d));
      d = succ[static_cast<std::size_t>(d ^ 1)];
    } while (d != start);
    out.faces.push_back(std::move(face));
  }
  SurfaceStats& s = out.stats;
  s.vertices = e.vertex_count();
  s.edges = e.edge_count();
  s.faces = darts == 0 ? 1 : static_cast<int>(out.faces.size());
  const int chi = s.euler_characteristic();
  // Connected rotation systems always give an even characteristic <= 2.
  if (chi % 2 != 0 || chi > 2) {
    throw std::logic_error("face tracing produced odd Euler characteristic");
  }
  s.genus = (2 - chi) / 2;
  return out;
}

SurfaceStats surface_stats(const Embedding& e) { return trace_faces(e).stats; }

int face_count(const Embedding& e) {
  const auto succ = e.successor_table();
  const int darts = e.graph().dart_count();
  if (darts == 0) return 1;
  std::vector<char> seen(static_cast<std::size_t>(darts), 0);
  int faces = 0;
  for (int start = 0; start < darts; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++faces;
    for (int d = start; !seen[static_cast<std::size_t>(d)];
         d = succ[static_cast<std::size_t>(d ^ 1)]) {
      seen[static_cast<std::size_t>(d)] = 1;
    }
  }
  return faces;
}

std::vector<int> face_degrees(const Embedding& e) {
  std::vector<int> out;
  for (const Face& f : trace_faces(e).faces) out.push_back(static_cast<int>(f.length()));
  std::sort(out.begin(), out.end());
  return out;
}

Embedding reverse(const Embedding& e) {
  auto rots = e.rotations();
  for (auto& r : rots) std::reverse(r.begin(), r.end());
  return Embedding(e.graph(), std::move(rots));
}

namespace {

void check_bijection(const std::vector<int>& map, int size, const char* what) {
  if (static_cast<int>(map.size()) != size) {
    throw InvalidInput(std::string(what) + " map has wrong size");
  }
  std::vector<char> hit(static_cast<std::size_t>(size), 0);
  for (int x : map) {
    if (x < 1 || x > size || hit[static_cast<std::size_t>(x - 1)]) {
      throw InvalidInput(std::string(what) + " map is not a bijection");
    }
    hit[static_cast<std::size_t>(x - 1)] = 1;
  }
}

}  // namespace

MultiGraph relabel(const MultiGraph& g, const Relabeling& r) {
  check_bijection(r.vertex_map, g.vertex_count(), "vertex");
  check_bijection(r.edge_map, g.edge_count(), "edge");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back({r.edge_map[static_cast<std::size_t>(e.id - 1)],
                     r.vertex_map[static_cast<std::size_t>(e.u - 1)],
                     r.vertex_map[static_cast<std::size_t>(e.v - 1)]});
  }
  return MultiGraph(g.vertex_count(), std::move(edges));
}

Embedding relabel(const Embedding& e, const Relabeling& r) {
  MultiGraph g = relabel(e.graph(), r);
  std::vector<std::vector<EdgeId>> rots(static_cast<std::size_t>(e.vertex_count()));
  for (VertexId v = 1; v <= e.vertex_count(); ++v) {
    auto& target = rots[static_cast<std::size_t>(r.vertex_map[static_cast<std::size_t>(v - 1)] - 1)];
    for (EdgeId id : e.rotation(v)) target.push_back(r.edge_map[static_cast<std::size_t>(id - 1)]);
  }
  return Embedding(std::move(g), std::move(rots));
}

std::string to_string(const Embedding& e) {
  std::ostringstream out;
  for (VertexId v = 1; v <= e.vertex_count(); ++v) {
    out << v << ": (";
    auto rot = e.rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i) out << (i ? "," : "") << rot[i];
    out << ")";
    if (v < e.vertex_count()) out << ' ';
  }
  return out.str();
}

}  // namespace surfemb
