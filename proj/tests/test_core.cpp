#include <doctest.h>

#include "support.hpp"
#include "surfemb/error.hpp"
#include "surfemb/io.hpp"
#include "surfemb/pipelines.hpp"

using namespace surfemb;

TEST_CASE("graph constructors") {
  const MultiGraph t = graphs::theta(5);
  CHECK(t.vertex_count() == 2);
  CHECK(t.edge_count() == 5);
  CHECK(t.multiplicity(1, 2) == 5);

  const MultiGraph tri = graphs::triangle_multi(1, 2, 3);
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 6);
  std::vector<int> degs;
  for (VertexId v = 1; v <= 3; ++v) degs.push_back(tri.degree(v));
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{3, 4, 5});

  const MultiGraph k2 = graphs::complete(2);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  CHECK(graphs::complete(5).edge_count() == 10);
  CHECK(graphs::complete_bipartite(3, 3).edge_count() == 9);
  CHECK(graphs::wheel(4).edge_count() == 8);
  CHECK(graphs::k4_plus().edge_count() == 7);
  CHECK(graphs::k5_minus_edge().edge_count() == 9);
  CHECK(graphs::octahedron().edge_count() == 12);
  CHECK(graphs::cube().edge_count() == 12);
  CHECK(graphs::petersen().edge_count() == 15);
  CHECK(graphs::complement(graphs::cube()).edge_count() == 16);
  CHECK(graphs::circulant(8, {1, 4}).edge_count() == 12);
  CHECK(graphs::circulant(7, {1, 2}).edge_count() == 14);
  CHECK(graphs::prism(3).edge_count() == 9);
}

TEST_CASE("parse_spec") {
  CHECK(graphs::parse_spec("K5") == graphs::complete(5));
  CHECK(graphs::parse_spec("K3,3") == graphs::complete_bipartite(3, 3));
  CHECK(graphs::parse_spec("theta:5") == graphs::theta(5));
  CHECK(graphs::parse_spec("k4plus") == graphs::k4_plus());
  CHECK(graphs::parse_spec("circulant:8:1,4") == graphs::circulant(8, {1, 4}));
  CHECK(graphs::parse_spec("complement:cube") == graphs::complement(graphs::cube()));
  CHECK_THROWS_AS(graphs::parse_spec("dodecahedron"), InvalidInput);
}

TEST_CASE("multigraph validation") {
  CHECK_THROWS_AS(MultiGraph(2, {{1, 1, 1}}), InvalidInput);
  CHECK_THROWS_AS(MultiGraph(2, {{1, 1, 2}, {3, 1, 2}}), InvalidInput);
  CHECK_THROWS_AS(MultiGraph(2, {{1, 1, 3}}), InvalidInput);
  const MultiGraph g(2, {{1, 2, 1}});
  CHECK(g.edge(1).u == 1);
  CHECK(g.edge(1).v == 2);
}

TEST_CASE("make_embedding") {
  const auto ref = theta5_reference();
  const Embedding e(graphs::theta(5), {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}});
  CHECK(e == ref[1]);
  // cyclic shifts are the same embedding
  CHECK(Embedding(graphs::theta(5), {{3, 4, 5, 1, 2}, {2, 3, 4, 5, 1}}) == e);
  CHECK_NOTHROW(Embedding(graphs::complete(2), {{1}, {1}}));
  CHECK_THROWS_AS(Embedding(graphs::theta(5), {{1, 2, 3, 4, 5}, {1, 2, 3, 4}}), InvalidInput);
  CHECK_THROWS_AS(Embedding(graphs::theta(5), {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 4}}), InvalidInput);
  CHECK_THROWS_AS(Embedding(MultiGraph(4, {{1, 1, 2}, {2, 3, 4}}), {{1}, {1}, {2}, {2}}),
                  InvalidInput);
}

TEST_CASE("trace_faces") {
  const auto ref = theta5_reference();
  const FaceSet f2 = trace_faces(ref[1]);
  REQUIRE(f2.faces.size() == 1);
  CHECK(f2.faces[0].length() == 10);
  CHECK(f2.stats.genus == 2);

  const Embedding k2(graphs::complete(2), {{1}, {1}});
  const FaceSet fk2 = trace_faces(k2);
  REQUIRE(fk2.faces.size() == 1);
  CHECK(fk2.faces[0].length() == 2);
  CHECK(surface_stats(k2) == SurfaceStats{2, 1, 1, 0});

  const auto b = parse_appendix_b(appendix_b_text());
  REQUIRE(!b.empty());
  const FaceSet fa = trace_faces(b.front().embedding);
  REQUIRE(fa.faces.size() == 1);
  CHECK(fa.faces[0].length() == 20);
  CHECK(fa.stats.genus == 3);
  // each vertex appears four times on the single face
  std::vector<int> seen(6, 0);
  for (Dart d : fa.faces[0].darts) ++seen[static_cast<std::size_t>(b.front().embedding.vertex_of(d))];
  for (int v = 1; v <= 5; ++v) CHECK(seen[static_cast<std::size_t>(v)] == 4);
}

TEST_CASE("surface_stats of the K3,3 double-torus embedding") {
  const auto classes = pipeline_k33();
  REQUIRE(classes.size() == 1);
  const SurfaceStats s = surface_stats(classes.front().representative);
  CHECK(s.faces == 1);
  CHECK(s.genus == 2);
}

TEST_CASE("reverse") {
  const auto ref = theta5_reference();
  CHECK(reverse(reverse(ref[0])) == ref[0]);
  CHECK(face_count(reverse(ref[1])) == 1);
  const Embedding k2(graphs::complete(2), {{1}, {1}});
  CHECK(reverse(k2) == k2);
}

TEST_CASE("face invariants on random embeddings") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Embedding e = testing::random_embedding(rng);
    const FaceSet fs = trace_faces(e);
    std::vector<int> hits(static_cast<std::size_t>(e.graph().dart_count()), 0);
    std::size_t total = 0;
    for (const Face& f : fs.faces) {
      total += f.length();
      for (Dart d : f.darts) ++hits[static_cast<std::size_t>(d.index())];
    }
    CHECK(total == static_cast<std::size_t>(2 * e.edge_count()));
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    const int chi = e.vertex_count() - e.edge_count() + fs.stats.faces;
    CHECK(chi % 2 == 0);
    CHECK(fs.stats.genus >= 0);
    CHECK(surface_stats(reverse(e)) == fs.stats);

    // Rotating each rotation list does not change the faces.
    auto rots = e.rotations();
    for (auto& r : rots) std::rotate(r.begin(), r.begin() + static_cast<long>(rng() % r.size()), r.end());
    const Embedding shifted(e.graph(), rots);
    CHECK(shifted == e);
    CHECK(trace_faces(shifted).faces == fs.faces);
  }
}

TEST_CASE("relabel") {
  std::mt19937 rng(11);
  const Embedding e = theta5_reference()[0];
  const Relabeling r = testing::random_relabeling(2, 5, rng);
  const Embedding image = relabel(e, r);
  CHECK(surface_stats(image) == surface_stats(e));
  CHECK_THROWS_AS(relabel(e, Relabeling{{1, 1}, {1, 2, 3, 4, 5}}), InvalidInput);
}
