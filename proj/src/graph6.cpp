#include "phg/graph6.hpp"

#include <fstream>
#include <sstream>

namespace phg {

namespace {

constexpr int kBias = 63;
constexpr int kMax = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(const std::string& line, size_t pos) {
  if (pos >= line.size())
    throw Graph6Error("truncated graph6 line", pos);
  unsigned char c = static_cast<unsigned char>(line[pos]);
  if (c < kBias || c > kMax)
    throw Graph6Error("character outside printable graph6 range [63,126]", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string line = raw;
  size_t base = 0;
  if (line.rfind(kHeader, 0) == 0) {
    base = kHeader.size();
    line = line.substr(base);
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.empty()) throw Graph6Error("empty graph6 line", base);

  size_t pos = 0;
  long long n;
  if (line[0] == '~') {
    if (line.size() > 1 && line[1] == '~')
      throw Graph6Error("graph6 sizes above 258047 are not supported", base + 1);
    n = 0;
    for (pos = 1; pos <= 3; ++pos) n = (n << 6) | decode_byte(line, pos);
    if (n < kBias)
      throw Graph6Error("non-minimal long size header", base);
  } else {
    n = decode_byte(line, 0);
    pos = 1;
  }

  long long bits = n * (n - 1) / 2;
  size_t expected = static_cast<size_t>((bits + 5) / 6);
  if (line.size() - pos < expected)
    throw Graph6Error("bit field shorter than the " + std::to_string(expected) +
                          " bytes implied by n=" + std::to_string(n),
                      base + line.size());
  if (line.size() - pos > expected)
    throw Graph6Error("trailing bytes after bit field", base + pos + expected);

  std::vector<Edge> edges;
  int word = 0, left = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        word = decode_byte(line, pos);
        ++pos;
        left = 6;
      }
      if (word & (1 << (left - 1))) edges.push_back({i, j});
      --left;
    }
  if (left > 0 && (word & ((1 << left) - 1)) != 0)
    throw Graph6Error("nonzero padding bits", base + pos - 1);

  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  } else {
    throw Graph6Error("graph too large for graph6 writer", 0);
  }

  int word = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((word << (6 - used)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> graphs;
  std::ostringstream failures;
  std::string line;
  int line_no = 0;
  bool any_failed = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      failures << path << ":" << line_no << ": " << e.what() << "\n";
      any_failed = true;
    }
  }
  if (any_failed) throw std::runtime_error("graph6 parse failures:\n" + failures.str());
  return graphs;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& g : graphs) out << write_graph6(g) << "\n";
}

}  // namespace phg
