#pragma once

// Fundamental-polygon words: boundary words of one-face embeddings, surface
// classification by corner identification, and word equivalence.

#include <string>
#include <string_view>
#include <vector>

#include "surfemb/core.hpp"

namespace surfemb {

struct Letter {
  int id = 0;        // positive label
  bool plus = true;  // traversal direction

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Signed letters, each label occurring exactly twice.
struct PolygonWord {
  std::vector<Letter> letters;

  /// Accepts "a+b+a-b-", "a+ b+ a- b-", superscript signs and #<n> labels.
  static PolygonWord parse(std::string_view text);

  std::size_t length() const noexcept { return letters.size(); }
  /// Labels print as a, b, c, ... when there are at most 26 of them,
  /// otherwise as #<id>.
  std::string to_string() const;
  /// Throws InvalidInput unless every label occurs exactly twice.
  void validate() const;

  friend bool operator==(const PolygonWord&, const PolygonWord&) = default;
};

/// Walk of the single face; + on the first traversal of each edge, - on the
/// second. Throws InvalidInput if the embedding has more than one face.
PolygonWord boundary_word(const Embedding& e);

struct SurfaceType {
  bool orientable = true;
  int euler_characteristic = 2;
  int corners = 0;  // polygon vertices after identification
  int genus() const noexcept { return (2 - euler_characteristic) / 2; }

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

SurfaceType surface_from_word(const PolygonWord& w);

/// Least form over rotations, reflection and renaming (each label may also
/// have both signs flipped).
PolygonWord canonical_word(const PolygonWord& w);
bool words_equivalent(const PolygonWord& a, const PolygonWord& b);

}  // namespace surfemb
