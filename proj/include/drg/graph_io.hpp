// Copyright 2026 The drgkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plain-text edge lists:
//
//   # optional label
//   n m
//   u v        (m lines, 0 <= u < v < n)

#ifndef DRG_GRAPH_IO_HPP_
#define DRG_GRAPH_IO_HPP_

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "drg/error.hpp"
#include "drg/graph.hpp"

namespace drg {

inline void write_graph(std::ostream& out, const Graph& g) {
  if (!g.label().empty()) out << "# " << g.label() << '\n';
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

namespace detail {

[[noreturn]] inline void parse_fail(int line, const std::string& message) {
  fail(ErrorKind::kParse, "line " + std::to_string(line) + ": " + message);
}

inline bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

/// Reads exactly two non-negative integers from `line`; rejects trailing text.
inline std::pair<long long, long long> parse_pair(const std::string& line, int line_no) {
  std::istringstream in(line);
  long long a = 0, b = 0;
  if (!(in >> a >> b)) parse_fail(line_no, "expected two integers, got '" + line + "'");
  std::string rest;
  if (in >> rest) parse_fail(line_no, "unexpected trailing text '" + rest + "'");
  return {a, b};
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  std::string line;
  std::string label;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') {
      if (label.empty()) {
        const auto start = line.find_first_not_of(" \t", 1);
        label = start == std::string::npos ? "" : line.substr(start);
        while (!label.empty() && (label.back() == '\r' || label.back() == ' ')) label.pop_back();
      }
      continue;
    }
    if (detail::blank(line)) continue;
    std::tie(n, m) = detail::parse_pair(line, line_no);
    have_header = true;
    break;
  }
  if (!have_header) detail::parse_fail(line_no + 1, "missing 'n m' header");
  if (n < 0 || n > (1 << 24)) detail::parse_fail(line_no, "vertex count out of range");
  if (m < 0 || m > n * (n - 1) / 2) detail::parse_fail(line_no, "edge count out of range");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (static_cast<long long>(edges.size()) < m && std::getline(in, line)) {
    ++line_no;
    if (detail::blank(line)) continue;
    const auto [u, v] = detail::parse_pair(line, line_no);
    if (u < 0 || v >= n || u >= v) {
      detail::parse_fail(line_no, "edge '" + line + "' violates 0 <= u < v < n");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (static_cast<long long>(edges.size()) < m) {
    detail::parse_fail(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!detail::blank(line)) detail::parse_fail(line_no, "unexpected content after edge list");
  }
  try {
    return Graph(static_cast<int>(n), edges, label);
  } catch (const Error& e) {
    fail(ErrorKind::kParse, e.what());
  }
}

inline Graph graph_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kParse, "cannot open '" + path + "'");
  return read_graph(in);
}

inline void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kParameter, "cannot write '" + path + "'");
  write_graph(out, g);
}

}  // namespace drg

#endif  // DRG_GRAPH_IO_HPP_
