#include "flowroots/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace flowroots {

namespace {

std::string located(const std::string& what, int line, int column) {
  std::ostringstream os;
  os << "line " << line;
  if (column > 0) os << ", column " << column;
  os << ": " << what;
  return os.str();
}

[[noreturn]] void fail(const std::string& what, int line, int column) {
  throw ParseError(located(what, line, column), line, column);
}

struct Token {
  long value;
  int column;
};

// Splits a line into non-negative integers. Returns false for comment or
// blank lines.
bool tokenize(std::string_view line, int line_no, std::vector<Token>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
  if (i == line.size() || line[i] == '#') return false;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const int column = static_cast<int>(i) + 1;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    const std::string_view word = line.substr(i, j - i);
    long value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size() || value < 0)
      fail("expected a non-negative integer, got '" + std::string(word) + "'", line_no, column);
    out.push_back({value, column});
    i = j;
  }
  return true;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string_view line = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_no;
    f(line, line_no);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
}

}  // namespace

MultiGraph parse_edge_list(std::string_view text) {
  long n = -1, m = -1;
  std::vector<Edge> edges;
  std::vector<Token> tokens;
  int last_line = 0;
  for_each_line(text, [&](std::string_view line, int line_no) {
    last_line = line_no;
    if (!tokenize(line, line_no, tokens)) return;
    if (tokens.size() != 2)
      fail(n < 0 ? "expected header 'n m'" : "expected an edge 'u v'", line_no,
           tokens.size() > 2 ? tokens[2].column : 0);
    if (n < 0) {
      n = tokens[0].value;
      m = tokens[1].value;
      if (n > 100000 || m > 1000000) fail("graph too large", line_no, 0);
      return;
    }
    if (static_cast<long>(edges.size()) == m) fail("more edges than declared", line_no, tokens[0].column);
    for (const Token& t : tokens)
      if (t.value >= n) fail("vertex id " + std::to_string(t.value) + " out of range", line_no, t.column);
    edges.push_back({static_cast<int>(tokens[0].value), static_cast<int>(tokens[1].value)});
  });
  if (n < 0) fail("missing header 'n m'", last_line, 0);
  if (static_cast<long>(edges.size()) != m)
    fail("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), last_line, 0);
  return MultiGraph(static_cast<int>(n), std::move(edges));
}

FaceStructure parse_faces(std::string_view text) {
  FaceStructure fs;
  std::vector<Token> tokens;
  for_each_line(text, [&](std::string_view line, int line_no) {
    if (!tokenize(line, line_no, tokens)) return;
    std::vector<int> face;
    for (const Token& t : tokens) {
      if (t.value > 1000000) fail("edge index too large", line_no, t.column);
      face.push_back(static_cast<int>(t.value));
    }
    fs.faces.push_back(std::move(face));
  });
  return fs;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MultiGraph load_edge_list(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_edge_list(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

FaceStructure load_faces(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_faces(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

std::string format_edge_list(const MultiGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string format_faces(const FaceStructure& faces) {
  std::ostringstream os;
  for (const auto& f : faces.faces) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace flowroots
