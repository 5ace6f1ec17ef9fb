#include <doctest.h>

#include <set>

#include "support.hpp"
#include "surfemb/canon.hpp"
#include "surfemb/enumerate.hpp"
#include "surfemb/error.hpp"
#include "surfemb/pipelines.hpp"

using namespace surfemb;

namespace {

// Every (vertex map, edge map) pair that maps the graph onto itself, found
// by brute force over all permutations.
std::vector<Relabeling> brute_graph_automorphisms(const MultiGraph& g) {
  std::vector<Relabeling> out;
  std::vector<VertexId> vmap(static_cast<std::size_t>(g.vertex_count()));
  std::iota(vmap.begin(), vmap.end(), 1);
  do {
    std::vector<EdgeId> emap(static_cast<std::size_t>(g.edge_count()));
    std::iota(emap.begin(), emap.end(), 1);
    do {
      bool ok = true;
      for (const Edge& x : g.edges()) {
        const Edge& y = g.edge(emap[static_cast<std::size_t>(x.id - 1)]);
        const auto a = std::minmax(vmap[static_cast<std::size_t>(x.u - 1)],
                                   vmap[static_cast<std::size_t>(x.v - 1)]);
        if (a.first != y.u || a.second != y.v) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back({vmap, emap});
    } while (std::next_permutation(emap.begin(), emap.end()));
  } while (std::next_permutation(vmap.begin(), vmap.end()));
  return out;
}

std::vector<Embedding> all_rotation_systems(const MultiGraph& g) {
  std::vector<std::vector<std::vector<EdgeId>>> options;
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    std::vector<EdgeId> tail(inc.begin() + 1, inc.end());
    std::vector<std::vector<EdgeId>> opts;
    do {
      std::vector<EdgeId> r{inc.front()};
      r.insert(r.end(), tail.begin(), tail.end());
      opts.push_back(r);
    } while (std::next_permutation(tail.begin(), tail.end()));
    options.push_back(opts);
  }
  std::vector<Embedding> out;
  std::vector<std::size_t> idx(options.size(), 0);
  while (true) {
    std::vector<std::vector<EdgeId>> rots;
    for (std::size_t v = 0; v < options.size(); ++v) rots.push_back(options[v][idx[v]]);
    out.emplace_back(g, rots);
    std::size_t v = options.size();
    while (v-- > 0) {
      if (++idx[v] < options[v].size()) break;
      idx[v] = 0;
    }
    if (v == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace

TEST_CASE("Theta5 keys and groups") {
  const auto ref = theta5_reference();
  std::set<std::string> keys;
  for (const auto& e : ref) keys.insert(canonical_key(e));
  CHECK(keys.size() == 3);
  CHECK(automorphism_group_order(ref[0]) == 2);
  CHECK(automorphism_group_order(ref[1]) == 10);
  CHECK(automorphism_group_order(ref[2]) == 5);
  for (const auto& e : ref) CHECK(chirality(e) == Chirality::non_orientable);
  CHECK_FALSE(are_isomorphic(ref[1], ref[2]).has_value());
}

TEST_CASE("key is invariant under relabeling and the witness maps exactly") {
  std::mt19937 rng(3);
  const Embedding e = theta5_reference()[0];
  for (int i = 0; i < 50; ++i) {
    const Relabeling r = testing::random_relabeling(2, 5, rng);
    const Embedding image = relabel(e, r);
    CHECK(canonical_key(image) == canonical_key(e));
    const auto w = are_isomorphic(e, image);
    REQUIRE(w.has_value());
    CHECK(relabel(e, *w) == image);
  }
}

TEST_CASE("canonical form maps onto the decoded representative") {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Embedding e = testing::random_embedding(rng);
    const CanonicalForm f = canonical_form(e);
    CHECK(relabel(e, f.to_canonical) == embedding_from_key(f.key));
    CHECK(canonical_key(embedding_from_key(f.key)) == f.key);
  }
}

TEST_CASE("graph automorphism counts") {
  CHECK(graph_automorphism_count(graphs::complete_bipartite(3, 3)) == 72);
  CHECK(graph_automorphism_count(graphs::complete(5)) == 120);
  CHECK(graph_automorphism_count(graphs::complete(2)) == 2);
  CHECK(graph_automorphism_count(graphs::theta(5)) == 240);
  CHECK(graph_automorphism_count(graphs::petersen()) == 120);
  CHECK(graph_automorphism_count(graphs::cube()) == 48);
  // brute-force oracle on small multigraphs
  for (const MultiGraph& g : {graphs::triangle_multi(1, 2, 3), graphs::k4_plus(),
                              graphs::triangle_multi(2, 2, 1), graphs::wheel(4)}) {
    CHECK(graph_automorphism_count(g) == brute_graph_automorphisms(g).size());
  }
  CHECK(graphs_isomorphic(graphs::circulant(7, {1, 2}), graphs::circulant(7, {2, 3})));
  CHECK_FALSE(graphs_isomorphic(graphs::prism(3), graphs::complete_bipartite(3, 3)));
}

TEST_CASE("keys agree with brute-force isomorphism classes") {
  for (const MultiGraph& g : {graphs::theta(5), graphs::triangle_multi(1, 2, 3), graphs::k4_plus()}) {
    const auto autos = brute_graph_automorphisms(g);
    const auto systems = all_rotation_systems(g);
    std::set<std::vector<std::vector<EdgeId>>> seen;
    std::size_t orbits = 0;
    std::set<std::string> keys;
    for (const Embedding& e : systems) {
      keys.insert(canonical_key(e));
      if (seen.count(e.rotations())) continue;
      ++orbits;
      std::uint64_t stabilizer = 0;
      for (const auto& a : autos) {
        const Embedding image = relabel(e, a);
        seen.insert(image.rotations());
        if (image == e) ++stabilizer;
      }
      CHECK(automorphism_group_order(e) == stabilizer);
    }
    CHECK(keys.size() == orbits);
  }
}

TEST_CASE("group order divides the graph automorphism count") {
  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Embedding e = testing::random_embedding(rng);
    CHECK(graph_automorphism_count(e.graph()) % automorphism_group_order(e) == 0);
    CHECK(chirality(e) == chirality(reverse(e)));
  }
}

TEST_CASE("dedup") {
  // an orientable (chiral) embedding and its mirror
  const auto k5 = pipeline_k5();
  const EmbeddingClass* chiral = nullptr;
  for (const auto& c : k5)
    if (c.chirality == Chirality::orientable) chiral = &c;
  REQUIRE(chiral != nullptr);
  const std::vector<Embedding> pair{chiral->representative, reverse(chiral->representative)};
  CHECK(dedup(pair, DedupMode::iso).size() == 2);
  CHECK(dedup(pair, DedupMode::equivalence).size() == 1);

  EnumerationOptions o;
  o.genus = 2;
  const auto iso = exhaustive_classes(graphs::complete(5), o);
  CHECK(iso.size() == 45);
  std::vector<Embedding> reps;
  for (const auto& c : iso) reps.push_back(c.representative);
  const auto eq = dedup(reps, DedupMode::equivalence);
  CHECK(eq.size() == 31);
  CHECK(count_orientable(eq) == 14);
  CHECK(iso.size() == 2 * static_cast<std::size_t>(count_orientable(eq)) +
                          (eq.size() - static_cast<std::size_t>(count_orientable(eq))));
}

TEST_CASE("classes with equal keys share invariants") {
  std::mt19937 rng(13);
  for (int i = 0; i < 50; ++i) {
    const Embedding e = testing::random_embedding(rng);
    const Embedding image = relabel(e, testing::random_relabeling(e.vertex_count(), e.edge_count(), rng));
    CHECK(face_degrees(e) == face_degrees(image));
    CHECK(automorphism_group_order(e) == automorphism_group_order(image));
    CHECK(surface_stats(e).genus == surface_stats(image).genus);
  }
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(canonical_key(Embedding(graphs::complete(2), {{1}, {1}}), CanonLimits{1, 40}),
                  SizeGuardExceeded);
}
