#include "surfemb/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <utility>

#include "surfemb/error.hpp"

namespace surfemb::graphs {

namespace {

using Pair = std::pair<VertexId, VertexId>;

MultiGraph from_sorted(int n, std::vector<Pair> pairs) {
  for (auto& p : pairs) {
    if (p.first == p.second) throw InvalidInput("constructor would create a loop");
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  std::stable_sort(pairs.begin(), pairs.end());
  return MultiGraph::from_pairs(n, pairs);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

MultiGraph complete(int n) {
  require(n >= 1, "complete(n) needs n >= 1");
  std::vector<Pair> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  return from_sorted(n, std::move(pairs));
}

MultiGraph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete_bipartite needs positive sides");
  std::vector<Pair> pairs;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= n; ++b) pairs.emplace_back(a, m + b);
  return from_sorted(m + n, std::move(pairs));
}

MultiGraph theta(int m) {
  require(m >= 1, "theta(m) needs m >= 1");
  return from_sorted(2, std::vector<Pair>(static_cast<std::size_t>(m), Pair{1, 2}));
}

MultiGraph triangle_multi(int i, int j, int k) {
  require(i >= 1 && j >= 1 && k >= 1, "triangle multiplicities must be positive");
  std::vector<Pair> pairs;
  pairs.insert(pairs.end(), static_cast<std::size_t>(i), Pair{1, 2});
  pairs.insert(pairs.end(), static_cast<std::size_t>(j), Pair{1, 3});
  pairs.insert(pairs.end(), static_cast<std::size_t>(k), Pair{2, 3});
  return from_sorted(3, std::move(pairs));
}

MultiGraph k4_plus() {
  std::vector<Pair> pairs{{1, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  return from_sorted(4, std::move(pairs));
}

MultiGraph wheel(int n) {
  require(n >= 3, "wheel(n) needs n >= 3");
  std::vector<Pair> pairs;
  for (int i = 1; i <= n; ++i) {
    pairs.emplace_back(i, i % n + 1);
    pairs.emplace_back(i, n + 1);
  }
  return from_sorted(n + 1, std::move(pairs));
}

MultiGraph k5_minus_edge() {
  std::vector<Pair> pairs;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      if (!(a == 1 && b == 2)) pairs.emplace_back(a, b);
  return from_sorted(5, std::move(pairs));
}

MultiGraph circulant(int n, const std::vector<int>& connections) {
  require(n >= 2, "circulant needs n >= 2");
  std::set<Pair> pairs;
  for (int s : connections) {
    const int r = ((s % n) + n) % n;
    if (r == 0) throw InvalidInput("circulant connection " + std::to_string(s) +
                                   " would create loops");
    for (int i = 0; i < n; ++i) {
      int a = i + 1, b = (i + r) % n + 1;
      pairs.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return from_sorted(n, {pairs.begin(), pairs.end()});
}

MultiGraph prism(int n) {
  require(n >= 3, "prism(n) needs n >= 3");
  std::vector<Pair> pairs;
  for (int i = 1; i <= n; ++i) {
    pairs.emplace_back(i, i % n + 1);
    pairs.emplace_back(n + i, n + i % n + 1);
    pairs.emplace_back(i, n + i);
  }
  return from_sorted(2 * n, std::move(pairs));
}

MultiGraph cube() {
  std::vector<Pair> pairs;
  for (int x = 0; x < 8; ++x)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (!(x & bit)) pairs.emplace_back(x + 1, (x | bit) + 1);
  return from_sorted(8, std::move(pairs));
}

MultiGraph octahedron() {
  std::vector<Pair> pairs;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      if (b != a + 3) pairs.emplace_back(a, b);
  return from_sorted(6, std::move(pairs));
}

MultiGraph petersen() {
  std::vector<Pair> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(i + 1, (i + 1) % 5 + 1);
    pairs.emplace_back(i + 1, i + 6);
    pairs.emplace_back(i + 6, (i + 2) % 5 + 6);
  }
  return from_sorted(10, std::move(pairs));
}

MultiGraph complement(const MultiGraph& g) {
  require(g.is_simple(), "complement is defined for simple graphs only");
  const int n = g.vertex_count();
  std::vector<Pair> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (g.multiplicity(a, b) == 0) pairs.emplace_back(a, b);
  return from_sorted(n, std::move(pairs));
}

namespace {

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::vector<int> parse_ints(std::string_view text, char sep, std::string_view whole) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view part = text.substr(pos, next - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw InvalidInput("bad integer list in graph descriptor '" + std::string(whole) + "'");
    }
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

std::vector<int> args_of(const std::string& s, std::size_t count, std::string_view whole) {
  auto v = parse_ints(s, ',', whole);
  if (v.size() != count) {
    throw InvalidInput("graph descriptor '" + std::string(whole) + "' expects " +
                       std::to_string(count) + " argument(s)");
  }
  return v;
}

}  // namespace

MultiGraph parse_spec(std::string_view spec) {
  const std::string s = lower(spec);
  if (s.empty()) throw InvalidInput("empty graph descriptor");
  const auto colon = s.find(':');
  const std::string name = s.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);

  if (name == "complement") {
    if (rest.empty()) throw InvalidInput("complement needs an inner descriptor");
    return complement(parse_spec(rest));
  }
  if (colon == std::string::npos && s.size() > 1 && s[0] == 'k' &&
      s.find_first_not_of("0123456789,", 1) == std::string::npos) {
    auto v = parse_ints(s.substr(1), ',', spec);
    if (v.size() == 1) return complete(v[0]);
    if (v.size() == 2) return complete_bipartite(v[0], v[1]);
    throw InvalidInput("unknown graph descriptor '" + std::string(spec) + "'");
  }
  if (name == "complete") return complete(args_of(rest, 1, spec)[0]);
  if (name == "bipartite") {
    auto v = args_of(rest, 2, spec);
    return complete_bipartite(v[0], v[1]);
  }
  if (name == "theta") return theta(args_of(rest, 1, spec)[0]);
  if (name == "triangle") {
    auto v = args_of(rest, 3, spec);
    return triangle_multi(v[0], v[1], v[2]);
  }
  if (name == "k4plus" || name == "k4+") return k4_plus();
  if (name == "wheel") return wheel(args_of(rest, 1, spec)[0]);
  if (name == "k5-uv" || name == "k5minusedge") return k5_minus_edge();
  if (name == "circulant") {
    const auto second = rest.find(':');
    if (second == std::string::npos) {
      throw InvalidInput("circulant descriptor is circulant:<n>:<s1,s2,...>");
    }
    const int n = args_of(rest.substr(0, second), 1, spec)[0];
    return circulant(n, parse_ints(rest.substr(second + 1), ',', spec));
  }
  if (name == "prism") return prism(args_of(rest, 1, spec)[0]);
  if (name == "cube") return cube();
  if (name == "octahedron") return octahedron();
  if (name == "petersen") return petersen();
  throw InvalidInput("unknown graph descriptor '" + std::string(spec) + "'");
}

}  // namespace surfemb::graphs
