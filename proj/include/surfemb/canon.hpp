#pragma once

// Isomorphism of embeddings, canonical keys, automorphism counts,
// chirality and deduplication.
//
// An isomorphism of connected maps is fixed by the image of a single dart,
// so the canonical key is the least serialization obtained by a rotation-
// guided traversal started from each of the 2m darts. The number of darts
// attaining the minimum is the order of the rotation-preserving
// automorphism group.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfemb/core.hpp"

namespace surfemb {

struct CanonLimits {
  int max_vertices = 16;
  int max_edges = 40;
};

using IsoWitness = Relabeling;

enum class Chirality { orientable, non_orientable };
enum class DedupMode { iso, equivalence };

const char* to_string(Chirality c) noexcept;
const char* to_string(DedupMode m) noexcept;

struct CanonicalForm {
  std::string key;
  /// Maps the input embedding onto embedding_from_key(key).
  Relabeling to_canonical;
  std::uint64_t automorphisms = 0;
};

CanonicalForm canonical_form(const Embedding& e, const CanonLimits& limits = {});
std::string canonical_key(const Embedding& e, const CanonLimits& limits = {});
/// The labeled embedding a key encodes (the canonical representative).
Embedding embedding_from_key(const std::string& key);
/// Short stable hex digest of a key, for display.
std::string key_digest(const std::string& key);

/// Witness mapping e1 onto e2, verified by direct application.
std::optional<IsoWitness> are_isomorphic(const Embedding& e1, const Embedding& e2,
                                         const CanonLimits& limits = {});

/// Rotation-preserving automorphisms only.
std::uint64_t automorphism_group_order(const Embedding& e, const CanonLimits& limits = {});

/// Number of (vertex map, edge map) automorphism pairs of a multigraph.
std::uint64_t graph_automorphism_count(const MultiGraph& g, const CanonLimits& limits = {});
bool graphs_isomorphic(const MultiGraph& a, const MultiGraph& b);

/// non_orientable iff the mirror image is isomorphic to e.
Chirality chirality(const Embedding& e, const CanonLimits& limits = {});

/// Lexicographic minimum of the keys of e and its mirror image.
std::string equivalence_key(const Embedding& e, const CanonLimits& limits = {});

struct EmbeddingClass {
  std::string canonical_key;
  Embedding representative;
  int genus = 0;
  std::vector<int> face_degrees;
  std::uint64_t group_order = 1;
  Chirality chirality = Chirality::orientable;

  std::string digest() const { return key_digest(canonical_key); }
};

/// Builds the class of the embedding a key encodes. In equivalence mode the
/// key must already be the lesser of the two chiral keys.
EmbeddingClass class_from_key(const std::string& key, const CanonLimits& limits = {});

std::string dedup_key(const Embedding& e, DedupMode mode, const CanonLimits& limits = {});

/// Classes sorted by key.
std::vector<EmbeddingClass> dedup(std::span<const Embedding> embeddings, DedupMode mode,
                                  const CanonLimits& limits = {});

/// Sorted group orders with their multiplicities.
std::map<std::uint64_t, int> group_order_histogram(std::span<const EmbeddingClass> classes);
int count_orientable(std::span<const EmbeddingClass> classes);

namespace detail {

/// Array view of a connected map: dart d sits at vertex_of[d] (0-based),
/// its partner is d ^ 1 and succ[d] is the next dart around that vertex.
struct MapView {
  int vertices = 0;
  int darts = 0;
  std::span<const int> vertex_of;
  std::span<const int> succ;
};

/// Reusable scratch buffers for repeated canonical-key computations.
class Canonizer {
 public:
  /// Canonical key of the map. If `root` is non-null it receives a dart
  /// attaining the minimum; `automorphisms` likewise.
  std::string key(const MapView& map, int* root = nullptr,
                  std::uint64_t* automorphisms = nullptr);

 private:
  enum class Cmp { less, equal, greater };
  Cmp traverse(const MapView& map, int root, bool write_best);

  std::vector<int> degree_;
  std::vector<int> vlabel_;
  std::vector<int> elabel_;
  std::vector<int> entry_;
  std::vector<std::uint16_t> best_;
  std::vector<std::uint16_t> current_;
};

/// Builds the vertex/edge relabeling induced by a traversal from `root`.
Relabeling traversal_labels(const Embedding& e, int root);

void check_limits(const MultiGraph& g, const CanonLimits& limits);

}  // namespace detail

}  // namespace surfemb
