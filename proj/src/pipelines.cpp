#include "surfemb/pipelines.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <set>

#include "surfemb/graphs.hpp"
#include "surfemb/surgery.hpp"

namespace surfemb {

std::array<Embedding, 3> theta5_reference() {
  const MultiGraph g = graphs::theta(5);
  return {Embedding(g, {{1, 2, 3, 4, 5}, {1, 2, 4, 5, 3}}),
          Embedding(g, {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}}),
          Embedding(g, {{1, 2, 3, 4, 5}, {1, 4, 2, 5, 3}})};
}

int Stage::orientable() const { return count_orientable(equivalence_classes); }

int Stage::non_orientable() const {
  return static_cast<int>(equivalence_classes.size()) - orientable();
}

Stage make_stage(std::string name, const std::vector<Embedding>& candidates) {
  Stage s;
  s.name = std::move(name);
  s.candidates = candidates.size();
  std::set<std::string> iso, eq;
  for (const Embedding& c : candidates) {
    const std::string k = canonical_key(c);
    const std::string km = canonical_key(reverse(c));
    iso.insert(k);
    iso.insert(km);
    eq.insert(std::min(k, km));
  }
  for (const auto& k : iso) s.iso_classes.push_back(class_from_key(k));
  for (const auto& k : eq) s.equivalence_classes.push_back(class_from_key(k));
  return s;
}

namespace {

template <class F>
std::vector<Embedding> expand(const std::vector<EmbeddingClass>& sources, F&& step) {
  std::vector<Embedding> out;
  for (const auto& c : sources) {
    for (auto& e : step(c.representative)) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

K5Pipeline run_k5_pipeline() {
  K5Pipeline p;
  const auto theta = theta5_reference();
  p.theta5 = make_stage("Theta5", {theta.begin(), theta.end()});

  const MultiGraph t123 = graphs::triangle_multi(1, 2, 3);
  p.t123 = make_stage("T123", expand(p.theta5.equivalence_classes,
                                     [&](const Embedding& e) { return all_splits(e, t123); }));

  const MultiGraph k4p = graphs::k4_plus();
  p.k4_plus = make_stage("K4+", expand(p.t123.equivalence_classes,
                                       [&](const Embedding& e) { return all_splits(e, k4p); }));

  const MultiGraph w4 = graphs::wheel(4);
  p.w4 = make_stage("W4", expand(p.k4_plus.equivalence_classes,
                                 [&](const Embedding& e) { return all_splits(e, w4); }));

  const MultiGraph k5uv = graphs::k5_minus_edge();
  std::vector<Embedding> candidates = expand(
      p.w4.equivalence_classes, [&](const Embedding& e) { return all_edge_additions(e, k5uv); });
  p.from_w4 = candidates.size();
  // The doubled edge of K4+ becomes a path through a new vertex, which is
  // then joined across a face to complete K5 - uv.
  auto subdivide_and_join = [&](const Embedding& e) {
    std::vector<Embedding> out;
    for (const Edge& x : e.graph().edges()) {
      if (e.graph().multiplicity(x.u, x.v) < 2) continue;
      for (auto& c : all_edge_additions(subdivide_edge(e, x.id), k5uv)) out.push_back(std::move(c));
    }
    return out;
  };
  const auto more = expand(p.k4_plus.equivalence_classes, subdivide_and_join);
  p.from_k4_plus = more.size();
  candidates.insert(candidates.end(), more.begin(), more.end());
  p.k5_minus_edge = make_stage("K5-uv", candidates);

  const MultiGraph k5 = graphs::complete(5);
  p.k5 = make_stage("K5", expand(p.k5_minus_edge.equivalence_classes,
                                 [&](const Embedding& e) { return all_edge_additions(e, k5); }));
  return p;
}

std::vector<EmbeddingClass> pipeline_k5() { return run_k5_pipeline().k5.equivalence_classes; }

namespace {

// K3,3 with A..F = 1..6. Edge ids: the five labels 1..5, then AC, AE, BD, BF.
enum : int { kA = 1, kB, kC, kD, kE, kF };
constexpr EdgeId kAC = 6, kAE = 7, kBD = 8, kBF = 9;
constexpr std::array<std::array<int, 2>, 5> kLabelEnds{
    {{kA, kB}, {kC, kD}, {kC, kF}, {kE, kD}, {kE, kF}}};

MultiGraph labelled_k33() {
  std::vector<Edge> edges;
  for (int l = 0; l < 5; ++l)
    edges.push_back({l + 1, kLabelEnds[static_cast<std::size_t>(l)][0],
                     kLabelEnds[static_cast<std::size_t>(l)][1]});
  edges.push_back({kAC, kA, kC});
  edges.push_back({kAE, kA, kE});
  edges.push_back({kBD, kB, kD});
  edges.push_back({kBF, kB, kF});
  return MultiGraph(6, std::move(edges));
}

// Expands one vertex whose cyclic order of labels is `cyc` into the path
// left - mid - right, if the labels ending at `left` and at `right` each
// form a contiguous block.
bool expand_path(const std::vector<int>& cyc, int side, int left, int mid, int right,
                 EdgeId left_edge, EdgeId right_edge, std::vector<std::vector<EdgeId>>& rots) {
  const std::size_t n = cyc.size();
  auto end_of = [&](int label) { return kLabelEnds[static_cast<std::size_t>(label)][side]; };
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (end_of(cyc[i]) == left && end_of(cyc[(i + 1) % n]) == left) start = i;
  }
  if (start == n) return false;
  std::vector<int> r;
  for (std::size_t i = 0; i < n; ++i) r.push_back(cyc[(start + i) % n]);

  std::vector<EdgeId>& l = rots[static_cast<std::size_t>(left - 1)];
  std::vector<EdgeId>& m = rots[static_cast<std::size_t>(mid - 1)];
  std::vector<EdgeId>& rr = rots[static_cast<std::size_t>(right - 1)];
  l = {r[0] + 1, r[1] + 1, left_edge};
  m = {left_edge};
  bool right_done = false;
  for (std::size_t i = 2; i < n; ++i) {
    const int w = end_of(r[i]);
    if (w == right) {
      if (right_done || i + 1 >= n || end_of(r[i + 1]) != right) return false;
      m.push_back(right_edge);
      rr = {r[i] + 1, r[i + 1] + 1, right_edge};
      right_done = true;
      ++i;
    } else if (w == mid) {
      m.push_back(r[i] + 1);
    } else {
      return false;
    }
  }
  return right_done && m.size() == 3;
}

// Permutations of A..F preserving the labelled subgraph.
std::vector<std::array<int, 7>> subgraph_automorphisms() {
  std::vector<std::array<int, 7>> out;
  for (int swap_sides = 0; swap_sides < 2; ++swap_sides) {
    for (int ce = 0; ce < 2; ++ce) {
      for (int df = 0; df < 2; ++df) {
        std::array<int, 7> p{0, kA, kB, kC, kD, kE, kF};
        if (ce) std::swap(p[kC], p[kE]);
        if (df) std::swap(p[kD], p[kF]);
        if (swap_sides) {
          // (A B)(C D)(E F) after the other swaps
          std::array<int, 7> s{0, kB, kA, kD, kC, kF, kE};
          for (int v = 1; v <= 6; ++v) p[static_cast<std::size_t>(v)] = s[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])];
        }
        out.push_back(p);
      }
    }
  }
  return out;
}

int label_of(int a, int b) {
  for (int l = 0; l < 5; ++l) {
    const auto& ends = kLabelEnds[static_cast<std::size_t>(l)];
    if ((ends[0] == a && ends[1] == b) || (ends[0] == b && ends[1] == a)) return l;
  }
  return -1;
}

}  // namespace

int K33Pipeline::count(int theta_index, int edge, const std::string& label) const {
  int n = 0;
  for (const auto& c : completions) {
    if (c.theta_index == theta_index && c.cae_vertex == 1 &&
        k33_labels[static_cast<std::size_t>(c.label[static_cast<std::size_t>(edge - 1)])] == label)
      ++n;
  }
  return n;
}

int K33Pipeline::orbits_from(int theta_index) const {
  int n = 0;
  for (std::size_t i : orbit_representatives)
    if (completions[i].theta_index == theta_index) ++n;
  return n;
}

namespace {

struct ThetaSymmetry {
  std::array<int, 5> edge_image;  // 1-based image of edge i+1
  bool swaps_vertices;
};

// Edge permutations mapping the embedding to itself or to its mirror image.
std::vector<ThetaSymmetry> theta_symmetries(const Embedding& e) {
  std::vector<ThetaSymmetry> out;
  const Embedding mirror = reverse(e);
  std::array<int, 5> perm{1, 2, 3, 4, 5};
  do {
    for (int swap = 0; swap < 2; ++swap) {
      const Relabeling r{swap ? std::vector<VertexId>{2, 1} : std::vector<VertexId>{1, 2},
                         {perm.begin(), perm.end()}};
      const Embedding image = relabel(e, r);
      if (image == e || image == mirror) out.push_back({perm, swap == 1});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int label_index(const std::string& label) {
  const auto it = std::find(k33_labels.begin(), k33_labels.end(), label);
  return it == k33_labels.end() ? -1 : static_cast<int>(it - k33_labels.begin());
}

}  // namespace

int K33Pipeline::central_orbits(int theta_index, const std::string& label) const {
  const int li = label_index(label);
  std::set<std::array<int, 5>> pending;
  for (const auto& c : completions)
    if (c.theta_index == theta_index && c.cae_vertex == 1 && c.label[2] == li)
      pending.insert(c.label);
  const auto syms = theta_symmetries(theta5_reference()[static_cast<std::size_t>(theta_index)]);
  int orbits = 0;
  while (!pending.empty()) {
    const std::array<int, 5> x = *pending.begin();
    ++orbits;
    for (const auto& s : syms) {
      if (s.swaps_vertices || s.edge_image[2] != 3) continue;
      std::array<int, 5> y{};
      for (std::size_t i = 0; i < 5; ++i) y[static_cast<std::size_t>(s.edge_image[i] - 1)] = x[i];
      pending.erase(y);
    }
  }
  return orbits;
}

int K33Pipeline::central_classes(int theta_index, const std::string& label) const {
  const int li = label_index(label);
  std::set<std::string> keys;
  for (const auto& c : completions)
    if (c.theta_index == theta_index && c.cae_vertex == 1 && c.label[2] == li)
      keys.insert(equivalence_key(c.completion));
  return static_cast<int>(keys.size());
}

K33Pipeline run_k33_pipeline() {
  K33Pipeline p;
  const auto theta = theta5_reference();
  const MultiGraph g = labelled_k33();
  const MultiGraph k33 = graphs::complete_bipartite(3, 3);

  std::vector<Embedding> candidates;
  for (int t = 0; t < 3; ++t) {
    for (int cae = 1; cae <= 2; ++cae) {
      std::array<int, 5> label{0, 1, 2, 3, 4};
      do {
        std::vector<std::vector<EdgeId>> rots(6);
        std::vector<int> cyc;
        for (EdgeId id : theta[static_cast<std::size_t>(t)].rotation(cae))
          cyc.push_back(label[static_cast<std::size_t>(id - 1)]);
        if (!expand_path(cyc, 0, kC, kA, kE, kAC, kAE, rots)) continue;
        cyc.clear();
        for (EdgeId id : theta[static_cast<std::size_t>(t)].rotation(3 - cae))
          cyc.push_back(label[static_cast<std::size_t>(id - 1)]);
        if (!expand_path(cyc, 1, kD, kB, kF, kBD, kBF, rots)) continue;
        Embedding e(g, rots);
        if (!graphs_isomorphic(e.graph(), k33)) continue;
        candidates.push_back(e);
        p.completions.push_back({t, cae, label, std::move(e)});
      } while (std::next_permutation(label.begin(), label.end()));
    }
  }

  // Orbits of (Theta_5 source, C-A-E side, labeling) under the automorphisms.
  const auto autos = subgraph_automorphisms();
  std::map<std::tuple<int, int, std::array<int, 5>>, std::size_t> index;
  for (std::size_t i = 0; i < p.completions.size(); ++i) {
    const auto& c = p.completions[i];
    index[{c.theta_index, c.cae_vertex, c.label}] = i;
  }
  std::vector<bool> covered(p.completions.size(), false);
  for (std::size_t i = 0; i < p.completions.size(); ++i) {
    if (covered[i]) continue;
    p.orbit_representatives.push_back(i);
    const auto& c = p.completions[i];
    for (const auto& a : autos) {
      std::array<int, 5> image{};
      for (int k = 0; k < 5; ++k) {
        const auto& ends = kLabelEnds[static_cast<std::size_t>(c.label[static_cast<std::size_t>(k)])];
        image[static_cast<std::size_t>(k)] =
            label_of(a[static_cast<std::size_t>(ends[0])], a[static_cast<std::size_t>(ends[1])]);
      }
      const bool swaps = a[kA] == kB;
      const int side = swaps ? 3 - c.cae_vertex : c.cae_vertex;
      const auto it = index.find({c.theta_index, side, image});
      if (it != index.end()) covered[it->second] = true;
    }
  }

  p.k33 = make_stage("K3,3", candidates);
  return p;
}

std::vector<EmbeddingClass> pipeline_k33() { return run_k33_pipeline().k33.equivalence_classes; }

}  // namespace surfemb
