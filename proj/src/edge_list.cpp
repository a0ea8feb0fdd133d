#include "mdim/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

namespace mdim {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

// Splits into exactly two unsigned integers; nullopt on anything else.
std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_pair(std::string_view line) {
  std::uint64_t vals[2];
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    if (count == 2) return std::nullopt;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), vals[count]);
    if (ec != std::errc()) return std::nullopt;
    std::size_t next = static_cast<std::size_t>(ptr - line.data());
    if (next < line.size() && line[next] != ' ' && line[next] != '\t' && line[next] != '\r') {
      return std::nullopt;
    }
    i = next;
    ++count;
  }
  if (count != 2) return std::nullopt;
  return std::make_pair(vals[0], vals[1]);
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = strip_comment(raw);
    if (is_blank(line)) continue;
    auto pair = parse_pair(line);
    if (!header) {
      if (!pair) throw ParseError(lineno, "expected header \"n m\"");
      if (pair->first == 0) throw ParseError(lineno, "vertex count must be at least 1");
      if (pair->first > std::numeric_limits<Vertex>::max()) {
        throw ParseError(lineno, "vertex count too large");
      }
      header = pair;
      edges.reserve(pair->second);
      continue;
    }
    if (!pair) throw ParseError(lineno, "expected edge \"u v\"");
    if (edges.size() == header->second) {
      throw ParseError(lineno, "more edges than declared in header (" +
                                   std::to_string(header->second) + ")");
    }
    if (pair->first >= header->first || pair->second >= header->first) {
      throw ParseError(lineno, "vertex id out of range [0," + std::to_string(header->first) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(pair->first), static_cast<Vertex>(pair->second));
  }
  if (!header) throw ParseError(lineno + 1, "missing header \"n m\"");
  if (edges.size() != header->second) {
    throw ParseError(lineno + 1, "expected " + std::to_string(header->second) +
                                     " edges, found " + std::to_string(edges.size()));
  }
  return Graph::build(header->first, edges);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace mdim
