#include <doctest.h>

#include "support.hpp"
#include "surfemb/error.hpp"
#include "surfemb/io.hpp"
#include "surfemb/pipelines.hpp"
#include "surfemb/verify.hpp"

using namespace surfemb;

TEST_CASE("native round trip") {
  const Embedding e = theta5_reference()[1];
  const std::string text = write_embedding(e, "theta5-2");
  CHECK(text ==
        "graph theta5-2\nvertices 2\nedge 1 1 2\nedge 2 1 2\nedge 3 1 2\nedge 4 1 2\nedge 5 1 2\n"
        "rot 1: 1 2 3 4 5\nrot 2: 1 2 3 4 5\n");
  CHECK(parse_embedding(text) == e);
  CHECK(write_embedding(parse_embedding(text), "theta5-2") == text);

  std::mt19937 rng(31);
  std::vector<NamedEmbedding> list;
  for (int i = 0; i < 20; ++i)
    list.push_back({"random" + std::to_string(i), testing::random_embedding(rng), std::nullopt});
  const std::string all = write_embeddings(list);
  const auto back = parse_embeddings(all);
  REQUIRE(back.size() == list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(back[i].name == list[i].name);
    CHECK(back[i].embedding == list[i].embedding);
  }
  CHECK(write_embeddings(back) == all);
}

TEST_CASE("native format errors") {
  const char* loop = "graph bad\nvertices 2\nedge 1 1 1\nrot 1: 1\nrot 2:\n";
  CHECK_THROWS_AS(parse_embedding(loop), ParseError);
  const char* dup = "graph bad\nvertices 2\nedge 1 1 2\nedge 1 1 2\nrot 1: 1\nrot 2: 1\n";
  try {
    parse_embedding(dup);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 6);
  }
  const char* wrong_vertex = "graph bad\nvertices 3\nedge 1 1 2\nedge 2 2 3\nrot 1: 1 2\nrot 2: 1\nrot 3: 2\n";
  CHECK_THROWS_AS(parse_embedding(wrong_vertex), ParseError);
  const char* junk = "graph bad\nvertices x\n";
  try {
    parse_embedding(junk);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 10);
  }
}

TEST_CASE("appendix A") {
  const auto list = parse_appendix_a(appendix_a_text());
  REQUIRE(list.size() == 31);
  CHECK(list.front().name == "K5#01");
  REQUIRE(list.front().tag.has_value());
  CHECK(*list.front().tag == Chirality::orientable);
  for (const auto& x : list) {
    const SurfaceStats s = surface_stats(x.embedding);
    CHECK(s.genus == 2);
    CHECK(s.faces == 3);
  }
  CHECK_THROWS_AS(parse_appendix_a("K5#43 (or)\n-1 5 [1 0 0 0 0] 4 2 0 0 0]\n"), ParseError);
  CHECK_THROWS_AS(parse_appendix_a("K5#43 (or)\n-1 2 [1 0]\n-2 3 [1 0]\n-3 2 [1 0]\n"), ParseError);
}

TEST_CASE("appendix B") {
  const auto list = parse_appendix_b(appendix_b_text());
  REQUIRE(list.size() == 13);
  CHECK(list.front().name == "K5#a");
  for (const auto& x : list) {
    CHECK(face_count(x.embedding) == 1);
    CHECK(surface_stats(x.embedding).genus == 3);
  }
  CHECK(chirality(list.front().embedding) == Chirality::orientable);
  CHECK_THROWS_AS(parse_appendix_b("K5#z (or)\n-1 2 2\n-2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_appendix_b("K5#z (or)\n-1 2 3\n-2 1\n-3 2\n"), ParseError);
}

TEST_CASE("suite reports") {
  const VerificationReport r = run_suite("appendixB");
  CHECK(r.passed());
  CHECK(r.tsv() == run_suite("appendixB").tsv());
  const std::string first = r.tsv().substr(0, r.tsv().find('\n'));
  CHECK(first == "parsed systems\t13\t13\tPASS");
  CHECK_THROWS_AS(run_suite("nonsense"), InvalidInput);
}
