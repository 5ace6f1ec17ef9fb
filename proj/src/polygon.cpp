#include "surfemb/polygon.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "surfemb/error.hpp"

namespace surfemb {

namespace {

bool starts_with(std::string_view s, std::size_t at, std::string_view what) {
  return s.substr(at, what.size()) == what;
}

// Returns the sign at position `at` and its byte length, or 0 if none.
std::size_t read_sign(std::string_view s, std::size_t at, bool& plus) {
  if (at >= s.size()) return 0;
  if (s[at] == '+') return plus = true, 1;
  if (s[at] == '-') return plus = false, 1;
  if (starts_with(s, at, "⁺")) return plus = true, 3;   // superscript plus
  if (starts_with(s, at, "⁻")) return plus = false, 3;  // superscript minus
  if (starts_with(s, at, "−")) return plus = false, 3;  // minus sign
  return 0;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

// Renames labels by first appearance and makes each label's first sign +.
std::vector<Letter> normalize(const std::vector<Letter>& w) {
  std::map<int, std::pair<int, bool>> rename;  // id -> (new id, flip)
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    auto it = rename.find(l.id);
    if (it == rename.end())
      it = rename.emplace(l.id, std::pair{static_cast<int>(rename.size()) + 1, !l.plus}).first;
    out.push_back({it->second.first, it->second.second ? !l.plus : l.plus});
  }
  return out;
}

}  // namespace

PolygonWord PolygonWord::parse(std::string_view text) {
  PolygonWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      ++i;
      continue;
    }
    int id = 0;
    if (c >= 'a' && c <= 'z') {
      id = c - 'a' + 1;
      ++i;
    } else if (c == '#') {
      std::size_t j = ++i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw InvalidInput("expected a number after '#' at offset " + std::to_string(i));
      id = std::stoi(std::string(text.substr(i, j - i)));
      if (id <= 0) throw InvalidInput("letter ids must be positive");
      i = j;
    } else {
      throw InvalidInput("unexpected character at offset " + std::to_string(i));
    }
    bool plus = true;
    const std::size_t len = read_sign(text, i, plus);
    if (len == 0) throw InvalidInput("missing sign at offset " + std::to_string(i));
    i += len;
    w.letters.push_back({id, plus});
  }
  w.validate();
  return w;
}

void PolygonWord::validate() const {
  std::map<int, int> count;
  for (const Letter& l : letters) {
    if (l.id <= 0) throw InvalidInput("letter ids must be positive");
    ++count[l.id];
  }
  for (const auto& [id, c] : count) {
    if (c != 2) {
      throw InvalidInput("letter " + std::to_string(id) + " occurs " + std::to_string(c) +
                         " times; expected 2");
    }
  }
}

std::string PolygonWord::to_string() const {
  std::map<int, int> ids;
  for (const Letter& l : letters) ids.emplace(l.id, 0);
  const bool alpha = ids.size() <= 26 && ids.rbegin() != ids.rend() && ids.rbegin()->first <= 26;
  std::string out;
  for (const Letter& l : letters) {
    if (alpha) {
      out += static_cast<char>('a' + l.id - 1);
    } else {
      if (!out.empty()) out += ' ';
      out += '#' + std::to_string(l.id);
    }
    out += l.plus ? '+' : '-';
  }
  return out;
}

PolygonWord boundary_word(const Embedding& e) {
  const FaceSet faces = trace_faces(e);
  if (faces.stats.faces != 1)
    throw InvalidInput("boundary word needs one face, found " + std::to_string(faces.stats.faces));
  PolygonWord w;
  if (faces.faces.empty()) return w;
  std::vector<bool> seen(static_cast<std::size_t>(e.edge_count() + 1), false);
  for (const Dart& d : faces.faces.front().darts) {
    auto&& s = seen[static_cast<std::size_t>(d.edge)];
    w.letters.push_back({d.edge, !s});
    s = true;
  }
  return w;
}

SurfaceType surface_from_word(const PolygonWord& w) {
  w.validate();
  const int len = static_cast<int>(w.letters.size());
  SurfaceType out;
  if (len == 0) {
    out.corners = 1;
    out.euler_characteristic = 2;
    return out;
  }
  // Side i runs from corner i to corner i+1 when signed +, otherwise back.
  UnionFind uf(len);
  std::map<int, std::vector<int>> sides;
  for (int i = 0; i < len; ++i) sides[w.letters[static_cast<std::size_t>(i)].id].push_back(i);
  for (const auto& [id, pair] : sides) {
    auto ends = [&](int i) {
      const int a = i, b = (i + 1) % len;
      return w.letters[static_cast<std::size_t>(i)].plus ? std::pair{a, b} : std::pair{b, a};
    };
    const auto [s1, t1] = ends(pair[0]);
    const auto [s2, t2] = ends(pair[1]);
    uf.unite(s1, s2);
    uf.unite(t1, t2);
    if (w.letters[static_cast<std::size_t>(pair[0])].plus ==
        w.letters[static_cast<std::size_t>(pair[1])].plus)
      out.orientable = false;
  }
  int corners = 0;
  for (int i = 0; i < len; ++i)
    if (uf.find(i) == i) ++corners;
  out.corners = corners;
  out.euler_characteristic = corners - len / 2 + 1;
  return out;
}

PolygonWord canonical_word(const PolygonWord& w) {
  const std::size_t len = w.letters.size();
  std::vector<Letter> best = normalize(w.letters);
  std::vector<Letter> rotated(len);
  for (int reflect = 0; reflect < 2; ++reflect) {
    std::vector<Letter> base = w.letters;
    if (reflect) {
      std::reverse(base.begin(), base.end());
      for (Letter& l : base) l.plus = !l.plus;
    }
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t i = 0; i < len; ++i) rotated[i] = base[(i + r) % len];
      std::vector<Letter> cand = normalize(rotated);
      if (cand < best) best = std::move(cand);
    }
  }
  return PolygonWord{std::move(best)};
}

bool words_equivalent(const PolygonWord& a, const PolygonWord& b) {
  if (a.length() != b.length()) return false;
  return canonical_word(a) == canonical_word(b);
}

}  // namespace surfemb
