#include "isobound/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "isobound/error.hpp"

namespace isobound {

namespace {

constexpr char kBias = 63;

int decode_char(std::string_view text, std::size_t pos) {
  if (pos >= text.size())
    throw ParseError("graph6: truncated input", pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw ParseError("graph6: byte " + std::to_string(c) + " outside printable range 63..126",
                     pos);
  return c - kBias;
}

} // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header)
    pos = header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (pos >= text.size())
    throw ParseError("graph6: empty input", pos);

  long long n = 0;
  if (text[pos] != '~') {
    n = decode_char(text, pos++);
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    pos += 2;
    for (int k = 0; k < 6; ++k)
      n = (n << 6) | decode_char(text, pos++);
  } else {
    ++pos;
    for (int k = 0; k < 3; ++k)
      n = (n << 6) | decode_char(text, pos++);
  }
  if (n < 1)
    throw ParseError("graph6: graph order must be at least 1", pos);
  if (n > 100000)
    throw ParseError("graph6: order " + std::to_string(n) + " too large", pos);

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) < bytes)
    throw ParseError("graph6: truncated bit stream, expected " + std::to_string(bytes) +
                         " adjacency bytes",
                     text.size());
  if (static_cast<long long>(text.size() - pos) > bytes)
    throw ParseError("graph6: trailing data after adjacency bytes", pos + bytes);

  std::vector<Edge> edges;
  long long k = 0;
  int chunk = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int bit = 5 - static_cast<int>(k % 6);
      if (bit == 5)
        chunk = decode_char(text, pos++);
      if ((chunk >> bit) & 1)
        edges.emplace_back(i, j);
    }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph &g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  long long n = -1, m = -1, seen = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c")
      continue;
    if (tag == "p") {
      std::string fmt;
      if (n >= 0)
        throw ParseError("dimacs: duplicate problem line", line_start);
      if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col") || n < 1 || m < 0)
        throw ParseError("dimacs: malformed problem line", line_start);
    } else if (tag == "e") {
      if (n < 0)
        throw ParseError("dimacs: edge before problem line", line_start);
      long long u = 0, v = 0;
      if (!(ls >> u >> v))
        throw ParseError("dimacs: malformed edge line", line_start);
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError("dimacs: edge endpoint out of range 1.." + std::to_string(n),
                         line_start);
      if (u == v)
        throw ParseError("dimacs: self-loop", line_start);
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      ++seen;
    } else {
      throw ParseError("dimacs: unknown line type '" + tag + "'", line_start);
    }
  }
  if (n < 0)
    throw ParseError("dimacs: missing problem line", 0);
  if (seen != m)
    throw ParseError("dimacs: problem line declares " + std::to_string(m) + " edges, found " +
                         std::to_string(seen),
                     text.size());
  return Graph(static_cast<int>(n), edges);
}

std::string emit_dimacs(const Graph &g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges())
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph read_graph_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open graph file '" + path + "': file not found");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  std::string name = path;
  if (const auto slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (ends_with(".dimacs") || ends_with(".col"))
    return parse_dimacs(text).relabeled(name);
  return parse_graph6(text).relabeled(name);
}

} // namespace isobound
