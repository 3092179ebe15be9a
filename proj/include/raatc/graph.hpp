#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace raatc {

// Subset of vertex indices 0..63, bitset semantics.
using VertexSet = std::uint64_t;

int set_size(VertexSet s);
std::vector<int> set_members(VertexSet s);
VertexSet set_from_members(const std::vector<int>& members);

// Simplicial graph: no loops, symmetric adjacency, dense indices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n_vertices);

  int num_vertices() const { return n_; }
  int num_edges() const;
  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);

  // Neighbors of v (excludes v itself).
  VertexSet neighbors(int v) const;
  VertexSet vertex_mask() const;
  bool is_clique(VertexSet s) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  std::vector<std::pair<int, int>> edges() const;

  // Text format "<n>;<u>-<v>,<u>-<v>,...". Throws std::invalid_argument
  // naming the offending token.
  static Graph parse(const std::string& text);
  std::string to_edge_list() const;

  static Graph from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

// St(v): v together with all its neighbors.
VertexSet star(const Graph& g, int v);

// Double of g around v: two copies of g glued along St(v). Original
// vertices keep their indices, primed copies are appended in ascending
// original order.
Graph double_graph(const Graph& g, int v);

// Disjoint union plus all cross edges.
Graph join(const Graph& g1, const Graph& g2);

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph disjoint_cliques(int k, int l);

// Central K_n plus n satellite vertices, satellite i adjacent to the
// n-1 central vertices other than i. 2n vertices, C(n,2)+n(n-1) edges.
Graph o_n(int n);

// Backtracking isomorphism check for small graphs (test support).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace raatc
