#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "phg/graph.hpp"

namespace phg {

// Parse/encode errors carry the byte offset of the offending character.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& message, size_t byte_offset)
      : std::runtime_error(message + " (byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  size_t offset;
};

// graph6: printable-ASCII encoding of a simple undirected graph. The size
// header is followed by the upper triangle of the adjacency matrix in
// column-major bit order, packed into 6-bit groups offset by 63.
Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

// Newline-separated graph6 lines; blank lines are skipped. Parse failures
// are collected per line and reported together.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace phg
