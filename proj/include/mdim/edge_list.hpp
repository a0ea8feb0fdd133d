#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mdim/graph.hpp"

namespace mdim {

// Edge-list text format:
//   n m
//   u v      (m lines, 0-based ids)
// Blank lines are ignored and '#' starts a comment anywhere on a line.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Throws ParseError for malformed text and GraphError for a well-formed
/// edge list that is not a simple connected graph.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace mdim
