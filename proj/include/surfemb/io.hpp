#pragma once

// Text formats: the native embedding format and the two appendix listings
// of K5 rotation systems.
//
// Native format, one block per embedding:
//   graph <name>
//   vertices <n>
//   edge <id> <u> <v>
//   rot <v>: <edge id> <edge id> ...
// Blank lines and lines starting with '#' are ignored.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfemb/canon.hpp"
#include "surfemb/core.hpp"
#include "surfemb/error.hpp"

namespace surfemb {

class ParseError : public InvalidInput {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct NamedEmbedding {
  std::string name;
  Embedding embedding;
  std::optional<Chirality> tag;  // (or) / (non) annotation, when present
};

/// Exactly one embedding block.
Embedding parse_embedding(std::string_view text);
std::vector<NamedEmbedding> parse_embeddings(std::string_view text);

std::string write_embedding(const Embedding& e, std::string_view name = "embedding");
std::string write_embeddings(const std::vector<NamedEmbedding>& list);

/// Blocks "K5#NN (or|non)" followed by lines
/// "-<v> <nbr> [<edge> <crossings>...] ...". Only the first bracket integer
/// is used.
std::vector<NamedEmbedding> parse_appendix_a(std::string_view text);

/// Blocks "K5#x (or|non)" followed by "-<v> <nbr> <nbr> ..." for a simple
/// graph; edges are numbered by sorted endpoint pair.
std::vector<NamedEmbedding> parse_appendix_b(std::string_view text);

/// The bundled appendix listings.
std::string_view appendix_a_text();
std::string_view appendix_b_text();

}  // namespace surfemb
