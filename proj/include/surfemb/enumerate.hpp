#pragma once

// Exhaustive rotation-system enumeration with canonical deduplication,
// genus distributions, one-face theta embeddings and the chord-diagram
// analysis of one-face Theta_5 embeddings.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "surfemb/canon.hpp"
#include "surfemb/core.hpp"

namespace surfemb {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ull;

/// Worker count from SURFEMB_WORKERS, falling back to the hardware count.
int default_workers();

struct EnumerationOptions {
  std::optional<int> genus;
  std::optional<int> faces;
  DedupMode mode = DedupMode::iso;
  std::uint64_t budget = kDefaultBudget;
  int workers = 0;  // 0: default_workers()
  CanonLimits limits;
};

/// prod over vertices of (deg(v) - 1)!, saturating at UINT64_MAX.
std::uint64_t rotation_space_size(const MultiGraph& g);

/// Every rotation system, filtered and deduplicated. Sorted by key; the
/// result does not depend on the worker count. Throws BudgetExceeded.
std::vector<EmbeddingClass> exhaustive_classes(const MultiGraph& g,
                                               const EnumerationOptions& options = {});

struct GenusRecord {
  int genus = 0;
  std::uint64_t rotation_systems = 0;  // labeled systems of this genus
  int iso_classes = 0;
  int equivalence_classes = 0;
  int orientable = 0;      // chiral equivalence classes
  int non_orientable = 0;  // achiral ones
  std::map<std::uint64_t, int> group_orders;  // over equivalence classes
};

struct GenusDistribution {
  std::vector<GenusRecord> records;  // increasing genus, empty genera omitted

  int total_equivalence_classes() const;
  std::uint64_t total_rotation_systems() const;
  std::set<int> spectrum() const;
  const GenusRecord* find(int genus) const;
};

GenusDistribution genus_distribution(const MultiGraph& g, std::uint64_t budget = kDefaultBudget,
                                     int workers = 0);

/// One-face classes of Theta_m at the given genus.
std::vector<EmbeddingClass> theta_embeddings(int m, int genus, DedupMode mode = DedupMode::iso,
                                             std::uint64_t budget = kDefaultBudget);

/// A perfect matching on 2k cyclically ordered positions.
struct ChordDiagram {
  std::vector<int> partner;

  /// Lexicographic minimum of the partner table over all rotations and
  /// reflections of the positions.
  ChordDiagram canonical() const;
  /// Sorted cyclic chord lengths min(|i-j|, 2k-|i-j|).
  std::vector<int> chord_lengths() const;

  friend auto operator<=>(const ChordDiagram&, const ChordDiagram&) = default;
};

/// Chords pair the two traversals of each edge along the single face of a
/// two-vertex embedding. Returned in canonical form.
ChordDiagram face_pattern(const Embedding& e);

/// Matchings on `positions` points whose chords join positions of opposite
/// parity that are not cyclically adjacent.
std::vector<ChordDiagram> admissible_matchings(int positions);

struct ChordAnalysis {
  /// Admissible matchings with a length-3 chord placed on positions 0 and 3,
  /// plus the all-diametric matching.
  std::vector<ChordDiagram> labelled_sequences;
  std::vector<ChordDiagram> canonical_diagrams;  // sorted
  std::vector<bool> realizable;                  // parallel to canonical_diagrams
  std::vector<ChordDiagram> realized_patterns;   // face patterns of all one-face Theta_5s
};

ChordAnalysis theta5_chord_analysis();

}  // namespace surfemb
