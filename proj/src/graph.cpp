#include "raatc/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace raatc {

int set_size(VertexSet s) { return std::popcount(s); }

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

VertexSet set_from_members(const std::vector<int>& members) {
  VertexSet s = 0;
  for (int v : members) s |= VertexSet{1} << v;
  return s;
}

Graph::Graph(int n_vertices) : n_(n_vertices), adj_(n_vertices, 0) {
  if (n_vertices < 0 || n_vertices > 64)
    throw std::invalid_argument("vertex count must be in 0..64");
}

int Graph::num_edges() const {
  int total = 0;
  for (const auto m : adj_) total += std::popcount(m);
  return total / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range 0.." + std::to_string(n_ - 1));
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw std::invalid_argument("loop edge " + std::to_string(u) + "-" +
                                std::to_string(v));
  adj_[u] |= VertexSet{1} << v;
  adj_[v] |= VertexSet{1} << u;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

VertexSet Graph::vertex_mask() const {
  return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

bool Graph::is_clique(VertexSet s) const {
  for (VertexSet rest = s; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    VertexSet others = s & ~(VertexSet{1} << v);
    if ((adj_[v] & others) != others) return false;
  }
  return true;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw std::invalid_argument("label count does not match vertex count");
  labels_ = std::move(labels);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if ((adj_[u] >> v) & 1) out.emplace_back(u, v);
  return out;
}

Graph Graph::parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("missing ';' separator in \"" + text + "\"");
  const std::string head = text.substr(0, semi);
  int n = 0;
  try {
    size_t pos = 0;
    n = std::stoi(head, &pos);
    if (pos != head.size()) throw std::invalid_argument(head);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad vertex count token \"" + head + "\"");
  }
  Graph g(n);
  std::stringstream rest(text.substr(semi + 1));
  std::string token;
  while (std::getline(rest, token, ',')) {
    if (token.empty()) continue;
    auto dash = token.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("bad edge token \"" + token + "\"");
    int u = 0, v = 0;
    try {
      size_t pu = 0, pv = 0;
      u = std::stoi(token.substr(0, dash), &pu);
      v = std::stoi(token.substr(dash + 1), &pv);
      if (pu != dash || pv != token.size() - dash - 1)
        throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad edge token \"" + token + "\"");
    }
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("vertex out of range in token \"" + token +
                                  "\"");
    if (u == v)
      throw std::invalid_argument("loop edge in token \"" + token + "\"");
    g.add_edge(u, v);
  }
  return g;
}

std::string Graph::to_edge_list() const {
  std::string out = std::to_string(n_) + ";";
  bool first = true;
  for (auto [u, v] : edges()) {
    if (!first) out += ",";
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out;
}

Graph Graph::from_json(const nlohmann::json& j) {
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("bad edge entry " + e.dump());
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("labels"))
    g.set_labels(j.at("labels").get<std::vector<std::string>>());
  return g;
}

nlohmann::json Graph::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : edges()) j["edges"].push_back({u, v});
  if (!labels_.empty()) j["labels"] = labels_;
  return j;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

VertexSet star(const Graph& g, int v) {
  return g.neighbors(v) | (VertexSet{1} << v);
}

Graph double_graph(const Graph& g, int v) {
  const VertexSet st = star(g, v);
  const int n = g.num_vertices();
  std::vector<int> copy_index(n, -1);
  int next = n;
  for (int u = 0; u < n; ++u) {
    if ((st >> u) & 1)
      copy_index[u] = u;  // glued along St(v)
    else
      copy_index[u] = next++;
  }
  Graph d(next);
  for (auto [a, b] : g.edges()) {
    d.add_edge(a, b);
    int a2 = copy_index[a], b2 = copy_index[b];
    if (!d.adjacent(a2, b2)) d.add_edge(a2, b2);
  }
  return d;
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.num_vertices(), n2 = g2.num_vertices();
  Graph g(n1 + n2);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete(n) requires n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph edgeless_graph(int n) {
  if (n < 1) throw std::invalid_argument("edgeless(n) requires n >= 1");
  return Graph(n);
}

Graph disjoint_cliques(int k, int l) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("disjoint_cliques requires positive sizes");
  Graph g(k + l);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  for (int u = k; u < k + l; ++u)
    for (int v = u + 1; v < k + l; ++v) g.add_edge(u, v);
  return g;
}

Graph o_n(int n) {
  if (n < 1) throw std::invalid_argument("o_n(n) requires n >= 1");
  Graph g(2 * n);
  // central K_n on 0..n-1; satellite n+i adjacent to all central but i
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  for (int i = 0; i < n; ++i)
    for (int u = 0; u < n; ++u)
      if (u != i) g.add_edge(n + i, u);
  return g;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::vector<bool>& used, int v) {
  const int n = a.num_vertices();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int u = 0; u < v; ++u) {
      if (a.adjacent(u, v) != b.adjacent(map[u], w)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_isomorphism(a, b, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices()) return false;
  if (a.num_edges() != b.num_edges()) return false;
  auto degrees = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.num_vertices(); ++v)
      d.push_back(set_size(g.neighbors(v)));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  std::vector<int> map(a.num_vertices(), -1);
  std::vector<bool> used(a.num_vertices(), false);
  return extend_isomorphism(a, b, map, used, 0);
}

}  // namespace raatc
