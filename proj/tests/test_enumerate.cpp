#include <doctest.h>

#include <set>

#include "support.hpp"
#include "surfemb/enumerate.hpp"
#include "surfemb/error.hpp"
#include "surfemb/pipelines.hpp"
#include "surfemb/verify.hpp"

using namespace surfemb;

namespace {

std::set<std::string> keys_of(const std::vector<EmbeddingClass>& classes) {
  std::set<std::string> out;
  for (const auto& c : classes) out.insert(c.canonical_key);
  return out;
}

std::string dump(const std::vector<EmbeddingClass>& classes) {
  std::string out;
  for (const auto& c : classes) {
    out += c.canonical_key + "|" + std::to_string(c.group_order) + "|" + to_string(c.chirality) + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("K5 classes by genus") {
  EnumerationOptions o;
  o.mode = DedupMode::equivalence;
  o.genus = 2;
  const auto g2 = exhaustive_classes(graphs::complete(5), o);
  CHECK(g2.size() == 31);
  CHECK(count_orientable(g2) == 14);
  CHECK(keys_of(g2) == keys_of(pipeline_k5()));

  o.genus = 3;
  const auto g3 = exhaustive_classes(graphs::complete(5), o);
  CHECK(g3.size() == 13);
  CHECK(count_orientable(g3) == 11);
  for (const auto& c : g3) CHECK(c.face_degrees.size() == 1);
}

TEST_CASE("K3,3 double torus") {
  EnumerationOptions o;
  o.mode = DedupMode::equivalence;
  o.genus = 2;
  const auto classes = exhaustive_classes(graphs::complete_bipartite(3, 3), o);
  REQUIRE(classes.size() == 1);
  CHECK(classes.front().chirality == Chirality::non_orientable);
  CHECK(keys_of(classes) == keys_of(pipeline_k33()));
}

TEST_CASE("face count filter") {
  EnumerationOptions o;
  o.faces = 1;
  o.mode = DedupMode::equivalence;
  CHECK(exhaustive_classes(graphs::complete(5), o).size() == 13);
}

TEST_CASE("genus distributions") {
  const auto k5 = genus_distribution(graphs::complete(5));
  REQUIRE(k5.records.size() == 3);
  CHECK(k5.find(1)->equivalence_classes == 6);
  CHECK(k5.find(2)->equivalence_classes == 31);
  CHECK(k5.find(3)->equivalence_classes == 13);
  CHECK(k5.total_equivalence_classes() == 50);
  CHECK(k5.total_rotation_systems() == 7776);
  for (const auto& r : k5.records) CHECK(r.iso_classes == 2 * r.orientable + r.non_orientable);

  const auto k33 = genus_distribution(graphs::complete_bipartite(3, 3));
  CHECK(k33.spectrum() == std::set<int>{1, 2});
  CHECK(k33.find(1)->equivalence_classes == 2);
  CHECK(k33.find(2)->equivalence_classes == 1);
  CHECK(k33.total_rotation_systems() == 64);

  const auto k2 = genus_distribution(graphs::complete(2));
  REQUIRE(k2.records.size() == 1);
  CHECK(k2.records[0].genus == 0);
  CHECK(k2.records[0].equivalence_classes == 1);
}

TEST_CASE("every rotation system lands in one genus bucket") {
  for (const auto& g : testing::sample_graphs()) {
    const auto d = genus_distribution(g);
    CHECK(d.total_rotation_systems() == rotation_space_size(g));
    for (const auto& r : d.records) CHECK(r.iso_classes == 2 * r.orientable + r.non_orientable);
  }
}

TEST_CASE("rotation_space_size") {
  CHECK(rotation_space_size(graphs::complete(5)) == 7776);
  CHECK(rotation_space_size(graphs::complete(6)) == 191102976ull);
  CHECK(rotation_space_size(graphs::theta(7)) == 518400);
  CHECK(rotation_space_size(graphs::complete(30)) == UINT64_MAX);
}

TEST_CASE("budget") {
  EnumerationOptions o;
  o.budget = 1000;
  try {
    exhaustive_classes(graphs::complete(5), o);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 7776);
    CHECK(e.budget() == 1000);
  }
}

TEST_CASE("worker count does not change the output") {
  for (const MultiGraph& g : {graphs::complete(5), graphs::octahedron(), graphs::theta(6)}) {
    EnumerationOptions o;
    o.workers = 1;
    const std::string one = dump(exhaustive_classes(g, o));
    for (int w : {2, 3, 7}) {
      o.workers = w;
      CHECK(dump(exhaustive_classes(g, o)) == one);
    }
  }
  SuiteOptions s1, s4;
  s1.workers = 1;
  s4.workers = 4;
  CHECK(run_suite("k33", s1).tsv() == run_suite("k33", s4).tsv());
}

TEST_CASE("theta embeddings") {
  CHECK(theta_embeddings(3, 1).size() == 1);
  const auto t5 = theta_embeddings(5, 2);
  CHECK(t5.size() == 3);
  for (const auto& c : t5) CHECK(c.face_degrees == std::vector<int>{10});
}

TEST_CASE("face patterns of the Theta5 embeddings") {
  const auto ref = theta5_reference();
  CHECK(face_pattern(ref[0]).chord_lengths() == std::vector<int>{3, 3, 3, 3, 5});
  CHECK(face_pattern(ref[1]).chord_lengths() == std::vector<int>{5, 5, 5, 5, 5});
  CHECK(face_pattern(ref[2]).chord_lengths() == std::vector<int>{3, 3, 3, 3, 3});
  CHECK_THROWS_AS(face_pattern(Embedding(graphs::theta(3), {{1, 2, 3}, {1, 3, 2}})), InvalidInput);
}

TEST_CASE("face pattern is an isomorphism invariant") {
  std::mt19937 rng(17);
  for (const auto& e : theta5_reference()) {
    for (int i = 0; i < 20; ++i) {
      const Embedding image = relabel(e, testing::random_relabeling(2, 5, rng));
      CHECK(face_pattern(image) == face_pattern(e));
      CHECK(face_pattern(reverse(image)) == face_pattern(e));
    }
  }
}

TEST_CASE("chord analysis") {
  const ChordAnalysis a = theta5_chord_analysis();
  CHECK(a.labelled_sequences.size() == 5);
  CHECK(a.canonical_diagrams.size() == 4);
  CHECK(std::count(a.realizable.begin(), a.realizable.end(), true) == 3);
  std::set<std::vector<int>> lengths;
  for (const auto& s : a.labelled_sequences) lengths.insert(s.chord_lengths());
  CHECK(lengths == std::set<std::vector<int>>{{5, 5, 5, 5, 5},
                                              {3, 3, 3, 3, 3},
                                              {3, 3, 5, 5, 5},
                                              {3, 3, 3, 3, 5}});
  for (std::size_t i = 0; i < a.canonical_diagrams.size(); ++i) {
    const bool is_f = a.canonical_diagrams[i].chord_lengths() == std::vector<int>{3, 3, 5, 5, 5};
    CHECK(a.realizable[i] == !is_f);
  }
  // every admissible matching obeys the parity and adjacency rules
  for (const auto& m : admissible_matchings(10)) {
    for (int p = 0; p < 10; ++p) {
      const int q = m.partner[static_cast<std::size_t>(p)];
      CHECK((q - p) % 2 != 0);
      CHECK((q - p + 10) % 10 != 1);
      CHECK((p - q + 10) % 10 != 1);
    }
  }
}
