#include "paving/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace paving {

SimpleGraph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 0)
    throw Error(ErrorCode::out_of_range, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw Error(ErrorCode::out_of_range,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") leaves the vertex range [0, " + std::to_string(vertex_count) + ")");
    if (u == v)
      throw Error(ErrorCode::loop_edge, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw Error(ErrorCode::duplicate_edge,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") repeats");
  }
  std::sort(edges.begin(), edges.end());
  return SimpleGraph{vertex_count, std::move(edges)};
}

SimpleGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_count = false;
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_lines;  // for error reporting after validation

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (!have_count) {
      long long v;
      if (!(fields >> v)) {
        if (fields.eof()) continue;  // blank or comment-only line
        throw Error(ErrorCode::parse_error,
                    "line " + std::to_string(line_no) + ": expected a vertex count");
      }
      std::string rest;
      if (fields >> rest)
        throw Error(ErrorCode::parse_error,
                    "line " + std::to_string(line_no) + ": trailing token \"" + rest + "\"");
      if (v < 0 || v > 1'000'000)
        throw Error(ErrorCode::parse_error,
                    "line " + std::to_string(line_no) + ": implausible vertex count");
      vertex_count = static_cast<int>(v);
      have_count = true;
      continue;
    }
    long long u, v;
    if (!(fields >> u)) {
      if (fields.eof()) continue;
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    if (!(fields >> v))
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(line_no) + ": expected two vertex indices");
    std::string rest;
    if (fields >> rest)
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(line_no) + ": trailing token \"" + rest + "\"");
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(line_no) + ": vertex outside [0, " +
                      std::to_string(vertex_count) + ")");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    edge_lines.push_back(line_no);
  }
  if (!have_count) throw Error(ErrorCode::parse_error, "empty input: missing vertex count");
  return make_graph(vertex_count, std::move(edges));
}

SimpleGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_graph(n, std::move(edges));
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::out_of_range, "a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_graph(n, std::move(edges));
}

SimpleGraph complete_bipartite(int m, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return make_graph(m + n, std::move(edges));
}

bool is_triangle_free(const SimpleGraph& g) {
  for (size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    for (int w = 0; w < g.vertex_count; ++w)
      if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) return false;
  }
  return true;
}

bool is_two_connected(const SimpleGraph& g) {
  int n = g.vertex_count;
  if (n < 3) return false;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [u, v] : g.edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }

  // Iterative DFS computing lowpoints; any articulation vertex (or a
  // disconnected graph) disqualifies.
  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<int> parent(static_cast<size_t>(n), -1);
  int timer = 0;
  bool ok = true;

  std::function<void(int)> dfs = [&](int u) {
    disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
    int children = 0;
    for (int w : adj[static_cast<size_t>(u)]) {
      if (disc[static_cast<size_t>(w)] == -1) {
        ++children;
        parent[static_cast<size_t>(w)] = u;
        dfs(w);
        low[static_cast<size_t>(u)] =
            std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(w)]);
        if (parent[static_cast<size_t>(u)] != -1 &&
            low[static_cast<size_t>(w)] >= disc[static_cast<size_t>(u)])
          ok = false;  // internal articulation vertex
      } else if (w != parent[static_cast<size_t>(u)]) {
        low[static_cast<size_t>(u)] =
            std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
      }
    }
    if (parent[static_cast<size_t>(u)] == -1 && children > 1) ok = false;  // root articulation
  };

  dfs(0);
  for (int v = 0; v < n; ++v)
    if (disc[static_cast<size_t>(v)] == -1) return false;  // disconnected
  return ok;
}

}  // namespace paving
