#include "rothlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace rothlab {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph Graph::complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("loops are not allowed");
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) return false;
  auto& nu = adj_[u];
  nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
  auto& nv = adj_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::min_degree() const {
  std::size_t d = order() == 0 ? 0 : adj_[0].size();
  for (const auto& n : adj_) d = std::min(d, n.size());
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& n : adj_) d = std::max(d, n.size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph c(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> comps;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<VertexSet> join_decomposition(const Graph& g) {
  return connected_components(complement(g));
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  Graph sub(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (g.has_edge(vertices[a], vertices[b])) sub.add_edge(a, b);
  return sub;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph u(a.order() + b.order());
  for (const auto& [x, y] : a.edges()) u.add_edge(x, y);
  for (const auto& [x, y] : b.edges()) u.add_edge(x + a.order(), y + a.order());
  return u;
}

Graph join(const Graph& a, const Graph& b) {
  Graph j = disjoint_union(a, b);
  for (Vertex x = 0; x < a.order(); ++x)
    for (Vertex y = 0; y < b.order(); ++y) j.add_edge(x, a.order() + y);
  return j;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw GraphError("permutation size mismatch");
  Graph r(g.order());
  for (const auto& [u, v] : g.edges()) r.add_edge(perm[u], perm[v]);
  return r;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (g.has_edge(vertices[a], vertices[b])) return false;
  return true;
}

namespace {

bool parse_index(std::string_view tok, Vertex& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text, std::size_t min_order) {
  std::vector<Edge> edges;
  std::size_t n = min_order;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      // "# n <count>" fixes the order so trailing isolated vertices survive.
      std::string_view comment = line.substr(hash + 1);
      while (!comment.empty() && comment.front() == ' ') comment.remove_prefix(1);
      Vertex hint = 0;
      if (comment.starts_with("n ") && parse_index(comment.substr(2), hint)) n = std::max(n, hint);
      line = line.substr(0, hash);
    }

    std::vector<std::string_view> toks;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos > start) toks.push_back(line.substr(start, pos - start));
    }
    if (toks.empty()) continue;
    Vertex u = 0, v = 0;
    if (toks.size() != 2 || !parse_index(toks[0], u) || !parse_index(toks[1], v))
      throw GraphError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
    if (u == v) throw GraphError("edge list line " + std::to_string(line_no) + ": loop");
    edges.emplace_back(u, v);
    n = std::max(n, std::max(u, v) + 1);
  }
  return Graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "# n " << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace rothlab
