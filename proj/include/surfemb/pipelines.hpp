#pragma once

// Guided constructions of the double-torus embeddings of K5 and K3,3 from
// the three one-face embeddings of Theta_5, by vertex splitting, subdivision
// and edge insertion, with canonical deduplication after every stage.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "surfemb/canon.hpp"
#include "surfemb/core.hpp"

namespace surfemb {

/// The three genus-2 rotation systems of Theta_5, in the order #1, #2, #3.
/// Vertex 1 is u, vertex 2 is v.
std::array<Embedding, 3> theta5_reference();

struct Stage {
  std::string name;
  std::size_t candidates = 0;
  std::vector<EmbeddingClass> iso_classes;          // closed under mirroring
  std::vector<EmbeddingClass> equivalence_classes;  // one per mirror pair

  int orientable() const;
  int non_orientable() const;
};

/// Deduplicates candidates into both class lists. Isomorphism classes are
/// taken over the candidates together with their mirror images.
Stage make_stage(std::string name, const std::vector<Embedding>& candidates);

struct K5Pipeline {
  Stage theta5;
  Stage t123;
  Stage k4_plus;
  Stage w4;
  Stage k5_minus_edge;
  Stage k5;
  std::size_t from_w4 = 0;      // edge additions to W4 representatives
  std::size_t from_k4_plus = 0;  // subdivide-and-join on K4+ representatives
};

K5Pipeline run_k5_pipeline();
/// Equivalence classes of the final stage.
std::vector<EmbeddingClass> pipeline_k5();

/// One labeling of the Theta_5 edges by {AB, CD, CF, ED, EF} together with
/// the choice of which Theta_5 vertex expands into the path C-A-E.
struct K33Labeling {
  int theta_index = 0;            // 0, 1, 2 for #1, #2, #3
  int cae_vertex = 1;             // 1 (u) or 2 (v)
  std::array<int, 5> label{};     // label of Theta_5 edge i+1, indexing k33_labels
  Embedding completion;           // the K3,3 embedding obtained
};

inline constexpr std::array<const char*, 5> k33_labels{"AB", "CD", "CF", "ED", "EF"};

struct K33Pipeline {
  std::vector<K33Labeling> completions;  // every labeling that expands
  /// completions[i] grouped into orbits of the eight automorphisms of K3,3
  /// fixing the subgraph AB + CD + CF + ED + EF; one entry per orbit.
  std::vector<std::size_t> orbit_representatives;
  Stage k33;

  /// Completions with C-A-E at u whose Theta_5 edge `edge` carries `label`.
  int count(int theta_index, int edge, const std::string& label) const;
  int orbits_from(int theta_index) const;
  /// Labelings counted by count(theta_index, 3, label), identified under the
  /// symmetries of the Theta_5 embedding (mirror symmetries included) that
  /// fix u and edge 3.
  int central_orbits(int theta_index, const std::string& label) const;
  /// Equivalence classes among the completions counted by count(theta_index, 3, label).
  int central_classes(int theta_index, const std::string& label) const;
};

K33Pipeline run_k33_pipeline();
std::vector<EmbeddingClass> pipeline_k33();

}  // namespace surfemb
