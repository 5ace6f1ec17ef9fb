#include <doctest.h>

#include "support.hpp"
#include "surfemb/enumerate.hpp"
#include "surfemb/error.hpp"
#include "surfemb/pipelines.hpp"
#include "surfemb/polygon.hpp"

using namespace surfemb;

TEST_CASE("parse and print") {
  const PolygonWord w = PolygonWord::parse("a+b+a-b-");
  REQUIRE(w.length() == 4);
  CHECK(w.to_string() == "a+b+a-b-");
  CHECK(PolygonWord::parse("a+ b+ a- b-") == w);
  CHECK(PolygonWord::parse("a⁺b⁺a⁻b⁻") == w);
  CHECK(PolygonWord::parse("a⁺ b⁺ a− b−") == w);
  CHECK(PolygonWord::parse("#1+ #2+ #1- #2-") == w);
  CHECK_THROWS_AS(PolygonWord::parse("a+b+a-"), InvalidInput);
  CHECK_THROWS_AS(PolygonWord::parse("a+b"), InvalidInput);
  CHECK_THROWS_AS(PolygonWord::parse("A+A-"), InvalidInput);
}

TEST_CASE("surface from word") {
  const SurfaceType octagon = surface_from_word(PolygonWord::parse("a+b+a-b-c+d+c-d-"));
  CHECK(octagon.orientable);
  CHECK(octagon.genus() == 2);
  CHECK(octagon.corners == 1);

  const SurfaceType ten = surface_from_word(PolygonWord::parse("a+b+c+d+e+a-b-c-d-e-"));
  CHECK(ten.orientable);
  CHECK(ten.genus() == 2);

  const SurfaceType torus = surface_from_word(PolygonWord::parse("a+b+a-b-"));
  CHECK(torus.orientable);
  CHECK(torus.genus() == 1);

  const SurfaceType sphere = surface_from_word(PolygonWord::parse("a+a-"));
  CHECK(sphere.euler_characteristic == 2);

  const SurfaceType projective = surface_from_word(PolygonWord::parse("a+a+"));
  CHECK_FALSE(projective.orientable);
  CHECK(projective.euler_characteristic == 1);

  const SurfaceType klein = surface_from_word(PolygonWord::parse("a+b+a+b-"));
  CHECK_FALSE(klein.orientable);
  CHECK(klein.euler_characteristic == 0);
}

TEST_CASE("boundary words") {
  const Embedding k2(graphs::complete(2), {{1}, {1}});
  CHECK(boundary_word(k2).to_string() == "a+a-");

  const char* published[3] = {"a+b+c+d+e+c-d-a-b-e-", "a+b+c+d+e+a-b-c-d-e-", "a+b+c+a-d+c-e+d-b-e-"};
  const auto ref = theta5_reference();
  for (int i = 0; i < 3; ++i) {
    const PolygonWord w = boundary_word(ref[static_cast<std::size_t>(i)]);
    CHECK(w.length() == 10);
    const SurfaceType s = surface_from_word(w);
    CHECK(s.orientable);
    CHECK(s.genus() == 2);
    CHECK(s.corners == 2);
    for (int j = 0; j < 3; ++j)
      CHECK(words_equivalent(w, PolygonWord::parse(published[j])) == (i == j));
  }
  CHECK_FALSE(words_equivalent(boundary_word(ref[1]), boundary_word(ref[2])));

  const auto k33 = pipeline_k33();
  REQUIRE(k33.size() == 1);
  const PolygonWord w = boundary_word(k33.front().representative);
  CHECK(w.length() == 18);
  CHECK(surface_from_word(w).corners == 6);
  CHECK(words_equivalent(w, PolygonWord::parse("a+b+c+d+e+f+b-g+h+c-f-i+g-a-d-h-i-e-")));

  CHECK_THROWS_AS(boundary_word(Embedding(graphs::theta(2), {{1, 2}, {1, 2}})), InvalidInput);
}

TEST_CASE("one-face embeddings classify consistently") {
  for (const auto& g : {graphs::complete(5), graphs::complete_bipartite(3, 3), graphs::theta(7)}) {
    EnumerationOptions o;
    o.faces = 1;
    for (const auto& c : exhaustive_classes(g, o)) {
      const SurfaceType s = surface_from_word(boundary_word(c.representative));
      CHECK(s.orientable);
      CHECK(s.genus() == c.genus);
    }
  }
}

TEST_CASE("isomorphic embeddings have equivalent words") {
  std::mt19937 rng(23);
  EnumerationOptions o;
  o.faces = 1;
  for (const auto& c : exhaustive_classes(graphs::complete(5), o)) {
    const Embedding image =
        relabel(c.representative, testing::random_relabeling(5, 10, rng));
    CHECK(words_equivalent(boundary_word(c.representative), boundary_word(image)));
  }
}

TEST_CASE("word equivalence is an equivalence relation") {
  std::mt19937 rng(29);
  auto random_word = [&](int letters) {
    std::vector<Letter> w;
    for (int i = 1; i <= letters; ++i) {
      w.push_back({i, (rng() & 1) != 0});
      w.push_back({i, (rng() & 1) != 0});
    }
    std::shuffle(w.begin(), w.end(), rng);
    return PolygonWord{w};
  };
  auto transform = [&](const PolygonWord& w) {
    std::vector<Letter> x = w.letters;
    std::rotate(x.begin(), x.begin() + static_cast<long>(rng() % x.size()), x.end());
    if (rng() & 1) {
      std::reverse(x.begin(), x.end());
      for (auto& l : x) l.plus = !l.plus;
    }
    std::vector<int> names(x.size() / 2 + 1);
    std::iota(names.begin(), names.end(), 0);
    std::shuffle(names.begin() + 1, names.end(), rng);
    std::vector<bool> flip(names.size());
    for (std::size_t i = 0; i < flip.size(); ++i) flip[i] = (rng() & 1) != 0;
    for (auto& l : x) {
      if (flip[static_cast<std::size_t>(l.id)]) l.plus = !l.plus;
      l.id = names[static_cast<std::size_t>(l.id)];
    }
    return PolygonWord{x};
  };
  for (int i = 0; i < 200; ++i) {
    const PolygonWord a = random_word(4);
    const PolygonWord b = transform(a);
    const PolygonWord c = transform(b);
    const PolygonWord d = random_word(4);
    CHECK(words_equivalent(a, a));
    CHECK(words_equivalent(a, b));
    CHECK(words_equivalent(b, a));
    CHECK(words_equivalent(a, c));
    CHECK(words_equivalent(a, d) == words_equivalent(d, a));
    CHECK(surface_from_word(a) == surface_from_word(b));
  }
}
