#include "surfemb/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace surfemb {

namespace data {
extern const std::string_view appendix_a;
extern const std::string_view appendix_b;
}  // namespace data

std::string_view appendix_a_text() { return data::appendix_a; }
std::string_view appendix_b_text() { return data::appendix_b; }

ParseError::ParseError(int line, int column, const std::string& message)
    : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column = 1;
};

struct Line {
  int number = 0;
  std::string_view text;
  std::vector<Token> tokens;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    ++number;
    out.push_back({number, l, tokenize(l)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

int parse_int(const Line& line, const Token& tok, std::string_view what) {
  int value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ParseError(line.number, tok.column,
                     "expected " + std::string(what) + ", found '" + std::string(tok.text) + "'");
  }
  return value;
}

bool skippable(const Line& l) { return l.tokens.empty() || l.tokens.front().text.front() == '#'; }

// Builds a validated embedding, attaching a line number to semantic errors.
Embedding build(int line, int n, std::vector<Edge> edges, std::vector<std::vector<EdgeId>> rots) {
  try {
    return Embedding(MultiGraph(n, std::move(edges)), std::move(rots));
  } catch (const InvalidInput& e) {
    throw ParseError(line, 1, e.what());
  }
}

struct BlockHeader {
  std::string name;
  std::optional<Chirality> tag;
};

// "K5#01 (or)" style headers; LaTeX residue like '$' and '\\' is ignored.
std::optional<BlockHeader> appendix_header(std::string_view raw) {
  std::string s;
  for (char c : raw)
    if (c != '$' && c != '\\' && c != '{' && c != '}') s += c;
  std::istringstream in(s);
  std::string name, tag;
  if (!(in >> name) || name.empty() || name.front() == '-') return std::nullopt;
  BlockHeader h{name, std::nullopt};
  if (in >> tag) {
    if (tag == "(or)") h.tag = Chirality::orientable;
    else if (tag == "(non)") h.tag = Chirality::non_orientable;
    else return std::nullopt;
  }
  return h;
}

std::string clean_appendix_line(std::string_view raw) {
  std::string s;
  for (char c : raw)
    if (c != '$' && c != '\\' && c != '{' && c != '}' && c != '&') s += c;
  return s;
}

template <class RowParser>
std::vector<NamedEmbedding> parse_appendix(std::string_view text, RowParser&& finish) {
  std::vector<NamedEmbedding> out;
  std::optional<BlockHeader> header;
  int header_line = 0;
  std::vector<std::pair<int, std::string>> rows;
  auto flush = [&]() {
    if (!header) return;
    if (rows.empty()) throw ParseError(header_line, 1, "block '" + header->name + "' has no rows");
    out.push_back({header->name, finish(header_line, rows), header->tag});
    header.reset();
    rows.clear();
  };
  for (const Line& l : split_lines(text)) {
    const std::string s = clean_appendix_line(l.text);
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (s[first] == '-') {
      if (!header) throw ParseError(l.number, static_cast<int>(first) + 1, "rotation before header");
      rows.emplace_back(l.number, s);
      continue;
    }
    auto h = appendix_header(l.text);
    if (!h) throw ParseError(l.number, static_cast<int>(first) + 1, "unrecognized line");
    flush();
    header = std::move(h);
    header_line = l.number;
  }
  flush();
  return out;
}

}  // namespace

std::vector<NamedEmbedding> parse_embeddings(std::string_view text) {
  std::vector<NamedEmbedding> out;
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto next = [&]() -> const Line* {
    while (i < lines.size() && skippable(lines[i])) ++i;
    return i < lines.size() ? &lines[i++] : nullptr;
  };
  auto expect_keyword = [](const Line& l, std::string_view kw) {
    if (l.tokens.front().text != kw) {
      throw ParseError(l.number, l.tokens.front().column,
                       "expected '" + std::string(kw) + "', found '" +
                           std::string(l.tokens.front().text) + "'");
    }
  };

  const Line* l = next();
  while (l) {
    expect_keyword(*l, "graph");
    const int block_line = l->number;
    std::string name;
    for (std::size_t t = 1; t < l->tokens.size(); ++t) {
      if (t > 1) name += ' ';
      name += l->tokens[t].text;
    }
    l = next();
    if (!l) throw ParseError(block_line, 1, "missing 'vertices' line");
    expect_keyword(*l, "vertices");
    if (l->tokens.size() != 2) throw ParseError(l->number, 1, "expected 'vertices <n>'");
    const int n = parse_int(*l, l->tokens[1], "vertex count");
    if (n < 1) throw ParseError(l->number, l->tokens[1].column, "vertex count must be positive");

    std::vector<Edge> edges;
    std::set<EdgeId> ids;
    std::vector<std::vector<EdgeId>> rots(static_cast<std::size_t>(n));
    std::vector<bool> have_rot(static_cast<std::size_t>(n), false);
    l = next();
    while (l && l->tokens.front().text == "edge") {
      if (l->tokens.size() != 4) throw ParseError(l->number, 1, "expected 'edge <id> <u> <v>'");
      const Edge x{parse_int(*l, l->tokens[1], "edge id"), parse_int(*l, l->tokens[2], "vertex"),
                   parse_int(*l, l->tokens[3], "vertex")};
      if (!ids.insert(x.id).second)
        throw ParseError(l->number, l->tokens[1].column, "duplicate edge id " + std::to_string(x.id));
      if (x.u == x.v)
        throw ParseError(l->number, l->tokens[2].column, "edge " + std::to_string(x.id) + " is a loop");
      edges.push_back(x);
      l = next();
    }
    while (l && l->tokens.front().text == "rot") {
      if (l->tokens.size() < 2) throw ParseError(l->number, 1, "expected 'rot <v>: <edges>'");
      Token vt = l->tokens[1];
      if (vt.text.empty() || vt.text.back() != ':')
        throw ParseError(l->number, vt.column, "expected '<v>:'");
      vt.text.remove_suffix(1);
      const int v = parse_int(*l, vt, "vertex");
      if (v < 1 || v > n) throw ParseError(l->number, vt.column, "vertex out of range");
      if (have_rot[static_cast<std::size_t>(v - 1)])
        throw ParseError(l->number, vt.column, "second rotation for vertex " + std::to_string(v));
      have_rot[static_cast<std::size_t>(v - 1)] = true;
      auto& rot = rots[static_cast<std::size_t>(v - 1)];
      for (std::size_t t = 2; t < l->tokens.size(); ++t) {
        const int id = parse_int(*l, l->tokens[t], "edge id");
        if (!ids.count(id))
          throw ParseError(l->number, l->tokens[t].column, "unknown edge " + std::to_string(id));
        rot.push_back(id);
      }
      l = next();
    }
    if (l && l->tokens.front().text != "graph") {
      throw ParseError(l->number, l->tokens.front().column,
                       "unexpected '" + std::string(l->tokens.front().text) + "'");
    }
    for (int v = 1; v <= n; ++v) {
      if (!have_rot[static_cast<std::size_t>(v - 1)] && n > 1)
        throw ParseError(block_line, 1, "no rotation for vertex " + std::to_string(v));
    }
    out.push_back({name, build(block_line, n, std::move(edges), std::move(rots)), std::nullopt});
  }
  return out;
}

Embedding parse_embedding(std::string_view text) {
  auto list = parse_embeddings(text);
  if (list.size() != 1)
    throw InvalidInput("expected one embedding, found " + std::to_string(list.size()));
  return std::move(list.front().embedding);
}

std::string write_embedding(const Embedding& e, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << "\n";
  out << "vertices " << e.vertex_count() << "\n";
  for (const Edge& x : e.graph().edges()) out << "edge " << x.id << ' ' << x.u << ' ' << x.v << "\n";
  for (VertexId v = 1; v <= e.vertex_count(); ++v) {
    out << "rot " << v << ":";
    for (EdgeId id : e.rotation(v)) out << ' ' << id;
    out << "\n";
  }
  return out.str();
}

std::string write_embeddings(const std::vector<NamedEmbedding>& list) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += "\n";
    out += write_embedding(list[i].embedding, list[i].name);
  }
  return out;
}

std::vector<NamedEmbedding> parse_appendix_a(std::string_view text) {
  return parse_appendix(text, [](int header_line, const std::vector<std::pair<int, std::string>>& rows) {
    std::map<EdgeId, std::pair<VertexId, VertexId>> ends;
    std::vector<std::vector<EdgeId>> rots(rows.size());
    for (const auto& [line, s] : rows) {
      std::size_t i = s.find('-') + 1;
      auto skip_ws = [&]() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      };
      auto read_int = [&](std::string_view what) {
        skip_ws();
        const std::size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        int value = 0;
        const auto res = std::from_chars(s.data() + start, s.data() + i, value);
        if (res.ec != std::errc{} || start == i)
          throw ParseError(line, static_cast<int>(start) + 1, "expected " + std::string(what));
        return value;
      };
      const int v = read_int("vertex");
      if (v < 1 || v > static_cast<int>(rows.size()))
        throw ParseError(line, 1, "vertex " + std::to_string(v) + " out of range");
      auto& rot = rots[static_cast<std::size_t>(v - 1)];
      if (!rot.empty()) throw ParseError(line, 1, "second rotation for vertex " + std::to_string(v));
      skip_ws();
      while (i < s.size()) {
        const int nbr = read_int("neighbour");
        skip_ws();
        if (i >= s.size() || s[i] != '[')
          throw ParseError(line, static_cast<int>(i) + 1, "expected '[' after neighbour");
        ++i;
        const int id = read_int("edge number");
        const std::size_t close = s.find(']', i);
        const std::size_t reopen = s.find('[', i);
        if (close == std::string::npos || (reopen != std::string::npos && reopen < close))
          throw ParseError(line, static_cast<int>(i) + 1, "unterminated bracket group");
        i = close + 1;
        skip_ws();
        const std::pair<VertexId, VertexId> pair{std::min(v, nbr), std::max(v, nbr)};
        const auto [it, fresh] = ends.emplace(id, pair);
        if (!fresh && it->second != pair) {
          throw ParseError(line, 1, "edge " + std::to_string(id) + " declared with endpoints " +
                                        std::to_string(it->second.first) + "-" +
                                        std::to_string(it->second.second) + " and " +
                                        std::to_string(pair.first) + "-" + std::to_string(pair.second));
        }
        rot.push_back(id);
      }
    }
    std::vector<Edge> edges;
    for (const auto& [id, p] : ends) edges.push_back({id, p.first, p.second});
    return build(header_line, static_cast<int>(rows.size()), std::move(edges), std::move(rots));
  });
}

std::vector<NamedEmbedding> parse_appendix_b(std::string_view text) {
  return parse_appendix(text, [](int header_line, const std::vector<std::pair<int, std::string>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<std::vector<VertexId>> nbrs(static_cast<std::size_t>(n));
    for (const auto& [line, s] : rows) {
      std::istringstream in(s.substr(s.find('-') + 1));
      int v = 0;
      if (!(in >> v) || v < 1 || v > n) throw ParseError(line, 1, "bad vertex number");
      auto& list = nbrs[static_cast<std::size_t>(v - 1)];
      if (!list.empty()) throw ParseError(line, 1, "second rotation for vertex " + std::to_string(v));
      std::string tok;
      while (in >> tok) {
        int w = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), w);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || w < 1 || w > n || w == v)
          throw ParseError(line, 1, "bad neighbour '" + tok + "'");
        if (std::find(list.begin(), list.end(), w) != list.end())
          throw ParseError(line, 1, "neighbour " + tok + " listed twice at vertex " + std::to_string(v));
        list.push_back(w);
      }
    }
    std::map<std::pair<VertexId, VertexId>, EdgeId> ids;
    for (int v = 1; v <= n; ++v) {
      for (VertexId w : nbrs[static_cast<std::size_t>(v - 1)]) {
        const auto& back = nbrs[static_cast<std::size_t>(w - 1)];
        if (std::find(back.begin(), back.end(), v) == back.end()) {
          throw ParseError(header_line, 1, "vertex " + std::to_string(v) + " lists " +
                                               std::to_string(w) + " but not conversely");
        }
        ids.emplace(std::pair{std::min(v, w), std::max(v, w)}, 0);
      }
    }
    std::vector<Edge> edges;
    for (auto& [pair, id] : ids) {
      id = static_cast<EdgeId>(edges.size()) + 1;
      edges.push_back({id, pair.first, pair.second});
    }
    std::vector<std::vector<EdgeId>> rots(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
      for (VertexId w : nbrs[static_cast<std::size_t>(v - 1)])
        rots[static_cast<std::size_t>(v - 1)].push_back(ids.at({std::min(v, w), std::max(v, w)}));
    return build(header_line, n, std::move(edges), std::move(rots));
  });
}

}  // namespace surfemb
