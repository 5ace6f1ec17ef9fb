#include "surfemb/canon.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "surfemb/error.hpp"

namespace surfemb {

const char* to_string(Chirality c) noexcept {
  return c == Chirality::orientable ? "orientable" : "non_orientable";
}

const char* to_string(DedupMode m) noexcept {
  return m == DedupMode::iso ? "iso" : "equivalence";
}

namespace detail {

void check_limits(const MultiGraph& g, const CanonLimits& limits) {
  if (g.vertex_count() > limits.max_vertices || g.edge_count() > limits.max_edges) {
    throw SizeGuardExceeded("graph with " + std::to_string(g.vertex_count()) +
                            " vertices and " + std::to_string(g.edge_count()) +
                            " edges exceeds canonizer bound of " +
                            std::to_string(limits.max_vertices) + "/" +
                            std::to_string(limits.max_edges));
  }
}

Canonizer::Cmp Canonizer::traverse(const MapView& map, int root, bool write_best) {
  std::fill(vlabel_.begin(), vlabel_.end(), 0);
  std::fill(elabel_.begin(), elabel_.end(), 0);
  auto& out = write_best ? best_ : current_;
  out.clear();
  Cmp state = write_best ? Cmp::less : Cmp::equal;
  auto emit = [&](int value) {
    const auto v = static_cast<std::uint16_t>(value);
    if (state == Cmp::equal) {
      const auto b = best_[out.size()];
      if (v < b) {
        state = Cmp::less;
      } else if (v > b) {
        return false;
      }
    }
    out.push_back(v);
    return true;
  };

  int next_vertex = 1;
  int next_edge = 0;
  vlabel_[static_cast<std::size_t>(map.vertex_of[static_cast<std::size_t>(root)])] = 1;
  entry_[0] = root;
  for (int i = 0; i < next_vertex; ++i) {
    const int start = entry_[static_cast<std::size_t>(i)];
    if (!emit(degree_[static_cast<std::size_t>(map.vertex_of[static_cast<std::size_t>(start)])]))
      return Cmp::greater;
    int d = start;
    do {
      int& el = elabel_[static_cast<std::size_t>(d >> 1)];
      if (el == 0) el = ++next_edge;
      if (!emit(el)) return Cmp::greater;
      const int partner = d ^ 1;
      int& vl = vlabel_[static_cast<std::size_t>(map.vertex_of[static_cast<std::size_t>(partner)])];
      if (vl == 0) {
        vl = ++next_vertex;
        entry_[static_cast<std::size_t>(vl - 1)] = partner;
      }
      d = map.succ[static_cast<std::size_t>(d)];
    } while (d != start);
  }
  if (next_vertex != map.vertices) {
    throw InvalidInput("canonical keys are defined for connected maps only");
  }
  return state;
}

std::string Canonizer::key(const MapView& map, int* root, std::uint64_t* automorphisms) {
  degree_.assign(static_cast<std::size_t>(map.vertices), 0);
  for (int d = 0; d < map.darts; ++d) ++degree_[static_cast<std::size_t>(map.vertex_of[static_cast<std::size_t>(d)])];
  vlabel_.assign(static_cast<std::size_t>(map.vertices), 0);
  elabel_.assign(static_cast<std::size_t>(map.darts / 2), 0);
  entry_.assign(static_cast<std::size_t>(map.vertices), 0);
  best_.reserve(static_cast<std::size_t>(map.vertices + map.darts));
  current_.reserve(best_.capacity());

  std::uint64_t count = 0;
  int best_root = 0;
  if (map.darts == 0) {
    best_.assign(1, 0);
    count = 1;
  } else {
    traverse(map, 0, true);
    count = 1;
    for (int r = 1; r < map.darts; ++r) {
      switch (traverse(map, r, false)) {
        case Cmp::less:
          std::swap(best_, current_);
          best_root = r;
          count = 1;
          break;
        case Cmp::equal:
          ++count;
          break;
        case Cmp::greater:
          break;
      }
    }
  }
  if (root) *root = best_root;
  if (automorphisms) *automorphisms = count;

  std::string key;
  key.reserve(2 * (best_.size() + 2));
  auto put = [&key](int v) {
    key.push_back(static_cast<char>((v >> 8) & 0xff));
    key.push_back(static_cast<char>(v & 0xff));
  };
  put(map.vertices);
  put(map.darts / 2);
  for (auto v : best_) put(v);
  return key;
}

Relabeling traversal_labels(const Embedding& e, int root) {
  const int n = e.vertex_count();
  Relabeling r;
  r.vertex_map.assign(static_cast<std::size_t>(n), 0);
  r.edge_map.assign(static_cast<std::size_t>(e.edge_count()), 0);
  if (e.edge_count() == 0) {
    r.vertex_map[0] = 1;
    return r;
  }
  std::vector<int> entry(static_cast<std::size_t>(n), 0);
  const auto succ = e.successor_table();
  int next_vertex = 1, next_edge = 0;
  r.vertex_map[static_cast<std::size_t>(e.vertex_of(Dart::from_index(root)) - 1)] = 1;
  entry[0] = root;
  for (int i = 0; i < next_vertex; ++i) {
    const int start = entry[static_cast<std::size_t>(i)];
    int d = start;
    do {
      EdgeId& el = r.edge_map[static_cast<std::size_t>(d >> 1)];
      if (el == 0) el = ++next_edge;
      const int partner = d ^ 1;
      VertexId& vl = r.vertex_map[static_cast<std::size_t>(e.vertex_of(Dart::from_index(partner)) - 1)];
      if (vl == 0) {
        vl = ++next_vertex;
        entry[static_cast<std::size_t>(vl - 1)] = partner;
      }
      d = succ[static_cast<std::size_t>(d)];
    } while (d != start);
  }
  return r;
}

}  // namespace detail

namespace {

struct MapArrays {
  std::vector<int> vertex_of;
  std::vector<int> succ;

  explicit MapArrays(const Embedding& e) {
    const int darts = e.graph().dart_count();
    vertex_of.resize(static_cast<std::size_t>(darts));
    for (int d = 0; d < darts; ++d)
      vertex_of[static_cast<std::size_t>(d)] = e.vertex_of(Dart::from_index(d)) - 1;
    auto s = e.successor_table();
    succ.assign(s.begin(), s.end());
  }

  detail::MapView view(const Embedding& e) const {
    return {e.vertex_count(), e.graph().dart_count(), vertex_of, succ};
  }
};

int read16(const std::string& key, std::size_t& pos) {
  if (pos + 2 > key.size()) throw InvalidInput("truncated canonical key");
  const int v = (static_cast<unsigned char>(key[pos]) << 8) |
                static_cast<unsigned char>(key[pos + 1]);
  pos += 2;
  return v;
}

Relabeling inverse(const Relabeling& r) {
  Relabeling out;
  out.vertex_map.resize(r.vertex_map.size());
  out.edge_map.resize(r.edge_map.size());
  for (std::size_t i = 0; i < r.vertex_map.size(); ++i)
    out.vertex_map[static_cast<std::size_t>(r.vertex_map[i] - 1)] = static_cast<VertexId>(i + 1);
  for (std::size_t i = 0; i < r.edge_map.size(); ++i)
    out.edge_map[static_cast<std::size_t>(r.edge_map[i] - 1)] = static_cast<EdgeId>(i + 1);
  return out;
}

Relabeling compose(const Relabeling& first, const Relabeling& then) {
  Relabeling out;
  for (VertexId v : first.vertex_map)
    out.vertex_map.push_back(then.vertex_map[static_cast<std::size_t>(v - 1)]);
  for (EdgeId e : first.edge_map)
    out.edge_map.push_back(then.edge_map[static_cast<std::size_t>(e - 1)]);
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Embedding& e, const CanonLimits& limits) {
  detail::check_limits(e.graph(), limits);
  MapArrays arrays(e);
  detail::Canonizer canon;
  CanonicalForm out;
  int root = 0;
  out.key = canon.key(arrays.view(e), &root, &out.automorphisms);
  out.to_canonical = detail::traversal_labels(e, root);
  return out;
}

std::string canonical_key(const Embedding& e, const CanonLimits& limits) {
  detail::check_limits(e.graph(), limits);
  MapArrays arrays(e);
  detail::Canonizer canon;
  return canon.key(arrays.view(e));
}

Embedding embedding_from_key(const std::string& key) {
  std::size_t pos = 0;
  const int n = read16(key, pos);
  const int m = read16(key, pos);
  if (n < 1) throw InvalidInput("malformed canonical key");
  std::vector<std::vector<EdgeId>> rots(static_cast<std::size_t>(n));
  std::vector<std::vector<VertexId>> ends(static_cast<std::size_t>(m));
  for (int v = 1; v <= n; ++v) {
    const int deg = read16(key, pos);
    for (int i = 0; i < deg; ++i) {
      const int id = read16(key, pos);
      if (id < 1 || id > m) throw InvalidInput("malformed canonical key");
      rots[static_cast<std::size_t>(v - 1)].push_back(id);
      ends[static_cast<std::size_t>(id - 1)].push_back(v);
    }
  }
  if (pos != key.size()) throw InvalidInput("malformed canonical key");
  std::vector<Edge> edges;
  for (int id = 1; id <= m; ++id) {
    const auto& ev = ends[static_cast<std::size_t>(id - 1)];
    if (ev.size() != 2) throw InvalidInput("malformed canonical key");
    edges.push_back({id, ev[0], ev[1]});
  }
  return Embedding(MultiGraph(n, std::move(edges)), std::move(rots));
}

std::string key_digest(const std::string& key) {
  std::uint64_t h = 14695981039346656037ull;
  for (char c : key) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<IsoWitness> are_isomorphic(const Embedding& e1, const Embedding& e2,
                                         const CanonLimits& limits) {
  const CanonicalForm f1 = canonical_form(e1, limits);
  const CanonicalForm f2 = canonical_form(e2, limits);
  if (f1.key != f2.key) return std::nullopt;
  IsoWitness w = compose(f1.to_canonical, inverse(f2.to_canonical));
  if (!(relabel(e1, w) == e2)) {
    throw std::logic_error("isomorphism witness failed verification");
  }
  return w;
}

std::uint64_t automorphism_group_order(const Embedding& e, const CanonLimits& limits) {
  return canonical_form(e, limits).automorphisms;
}

namespace {

// Counts vertex bijections a -> b preserving edge multiplicities, stopping
// once `limit` is reached.
class GraphMatcher {
 public:
  GraphMatcher(const MultiGraph& a, const MultiGraph& b) : n_(a.vertex_count()) {
    ma_ = matrix(a);
    mb_ = matrix(b);
    for (int v = 1; v <= n_; ++v) {
      deg_a_.push_back(a.degree(v));
      deg_b_.push_back(b.degree(v));
    }
    // Visit vertices of `a` in breadth-first order so each new vertex has
    // an already-mapped neighbour whenever possible.
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      seen[static_cast<std::size_t>(s)] = 1;
      order_.push_back(s);
      for (std::size_t i = order_.size() - 1; i < order_.size(); ++i) {
        const int v = order_[i];
        for (int w = 0; w < n_; ++w) {
          if (!seen[static_cast<std::size_t>(w)] && ma_[idx(v, w)] > 0) {
            seen[static_cast<std::size_t>(w)] = 1;
            order_.push_back(w);
          }
        }
      }
    }
  }

  std::uint64_t count(std::uint64_t limit) {
    limit_ = limit;
    found_ = 0;
    image_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), 0);
    search(0);
    return found_;
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * n_ + b); }

  std::vector<int> matrix(const MultiGraph& g) const {
    std::vector<int> m(static_cast<std::size_t>(n_ * n_), 0);
    for (const Edge& e : g.edges()) {
      ++m[idx(e.u - 1, e.v - 1)];
      ++m[idx(e.v - 1, e.u - 1)];
    }
    return m;
  }

  void search(std::size_t depth) {
    if (found_ >= limit_) return;
    if (depth == order_.size()) {
      ++found_;
      return;
    }
    const int v = order_[depth];
    for (int w = 0; w < n_; ++w) {
      if (used_[static_cast<std::size_t>(w)] || deg_a_[static_cast<std::size_t>(v)] != deg_b_[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int u = order_[i];
        ok = ma_[idx(v, u)] == mb_[idx(w, image_[static_cast<std::size_t>(u)])];
      }
      if (!ok) continue;
      image_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = 1;
      search(depth + 1);
      used_[static_cast<std::size_t>(w)] = 0;
      if (found_ >= limit_) return;
    }
  }

  int n_;
  std::vector<int> ma_, mb_, deg_a_, deg_b_, order_, image_;
  std::vector<char> used_;
  std::uint64_t limit_ = 0;
  std::uint64_t found_ = 0;
};

std::vector<int> sorted_degrees(const MultiGraph& g) {
  std::vector<int> d;
  for (int v = 1; v <= g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::uint64_t graph_automorphism_count(const MultiGraph& g, const CanonLimits& limits) {
  detail::check_limits(g, limits);
  GraphMatcher matcher(g, g);
  std::uint64_t count = matcher.count(UINT64_MAX);
  // Parallel copies may be permuted independently.
  for (int a = 1; a <= g.vertex_count(); ++a) {
    for (int b = a + 1; b <= g.vertex_count(); ++b) {
      for (int k = 2; k <= g.multiplicity(a, b); ++k) count *= static_cast<std::uint64_t>(k);
    }
  }
  return count;
}

bool graphs_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return GraphMatcher(a, b).count(1) == 1;
}

Chirality chirality(const Embedding& e, const CanonLimits& limits) {
  return canonical_key(e, limits) == canonical_key(reverse(e), limits)
             ? Chirality::non_orientable
             : Chirality::orientable;
}

std::string equivalence_key(const Embedding& e, const CanonLimits& limits) {
  return std::min(canonical_key(e, limits), canonical_key(reverse(e), limits));
}

std::string dedup_key(const Embedding& e, DedupMode mode, const CanonLimits& limits) {
  return mode == DedupMode::iso ? canonical_key(e, limits) : equivalence_key(e, limits);
}

EmbeddingClass class_from_key(const std::string& key, const CanonLimits& limits) {
  Embedding rep = embedding_from_key(key);
  const FaceSet faces = trace_faces(rep);
  std::vector<int> degrees;
  for (const Face& f : faces.faces) degrees.push_back(static_cast<int>(f.length()));
  std::sort(degrees.begin(), degrees.end());
  const CanonicalForm form = canonical_form(rep, limits);
  const std::string mirror = canonical_key(reverse(rep), limits);
  return EmbeddingClass{key,
                        std::move(rep),
                        faces.stats.genus,
                        std::move(degrees),
                        form.automorphisms,
                        mirror == form.key ? Chirality::non_orientable : Chirality::orientable};
}

std::vector<EmbeddingClass> dedup(std::span<const Embedding> embeddings, DedupMode mode,
                                  const CanonLimits& limits) {
  std::set<std::string> keys;
  for (const Embedding& e : embeddings) keys.insert(dedup_key(e, mode, limits));
  std::vector<EmbeddingClass> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(class_from_key(k, limits));
  return out;
}

std::map<std::uint64_t, int> group_order_histogram(std::span<const EmbeddingClass> classes) {
  std::map<std::uint64_t, int> h;
  for (const auto& c : classes) ++h[c.group_order];
  return h;
}

int count_orientable(std::span<const EmbeddingClass> classes) {
  return static_cast<int>(std::count_if(classes.begin(), classes.end(), [](const auto& c) {
    return c.chirality == Chirality::orientable;
  }));
}

}  // namespace surfemb
