#pragma once

#include <string>
#include <utility>
#include <vector>

#include "paving/errors.hpp"

namespace paving {

/// Undirected simple graph on vertices 0..vertex_count-1.
struct SimpleGraph {
  int vertex_count = 0;
  /// Normalized to first < second, sorted ascending.
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (auto [a, b] : edges)
      if (a == u && b == v) return true;
    return false;
  }
};

/// Validates and normalizes: LoopEdge on u == v, DuplicateEdge on repeats,
/// OutOfRange on vertices outside 0..v-1.
SimpleGraph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges);

/// Edge-list text: first meaningful line is the vertex count, each following
/// line is "u v"; '#' starts a comment; blank lines are skipped.
/// ParseError carries the 1-based line number.
SimpleGraph parse_graph(const std::string& text);

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph complete_bipartite(int m, int n);

bool is_triangle_free(const SimpleGraph& g);

/// Connected, at least 3 vertices, and no articulation vertex.
bool is_two_connected(const SimpleGraph& g);

}  // namespace paving
