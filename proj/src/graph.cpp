#include "demkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace demkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotZero: return "NotZero";
    case ErrorCode::IsTree: return "IsTree";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorCode::OutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n));
    if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
    canon.emplace_back(a, b);
  }
  build(n, std::move(canon));
}

Graph::Graph(int n, std::span<const Edge> edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  *this = Graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
}

void Graph::build(int n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(static_cast<std::size_t>(n), {});
  incident_ids_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  for (Vertex v = 0; v < n; ++v) {
    auto& ids = incident_ids_[v];
    ids.reserve(adjacency_[v].size());
    for (Vertex w : adjacency_[v]) ids.push_back(*edge_id(Edge(v, w)));
  }
}

Vertex Graph::check(Vertex v) const {
  if (!contains(v))
    throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " with n=" + std::to_string(order()));
  return v;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || a == b) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<int> Graph::edge_id(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) { return Graph(n, edges); }

int DistanceLayers::eccentricity() const {
  int best = 0;
  for (int d : raw_) best = std::max(best, d);
  return best;
}

std::vector<Vertex> DistanceLayers::level(int hops) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(raw_.size()); ++v)
    if (raw_[v] == hops) out.push_back(v);
  return out;
}

void bfs_raw(const Graph& g, Vertex x, std::vector<int>& dist, int skip_edge) {
  dist.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.order()));
  dist[x] = 0;
  queue.push_back(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const auto nbrs = g.neighbors(u);
    const auto ids = g.incident_edge_ids(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (ids[k] == skip_edge) continue;
      const Vertex w = nbrs[k];
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

DistanceLayers bfs_distances(const Graph& g, Vertex x) {
  if (!g.contains(x)) throw Error(ErrorCode::OutOfRange, "source vertex " + std::to_string(x));
  std::vector<int> dist;
  bfs_raw(g, x, dist);
  return DistanceLayers(x, std::move(dist));
}

Distance distance_after_deletion(const Graph& g, Edge e, Vertex x, Vertex y) {
  const auto id = g.edge_id(e);
  if (!id)
    throw Error(ErrorCode::EdgeNotPresent,
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
  if (!g.contains(x) || !g.contains(y)) throw Error(ErrorCode::OutOfRange, "distance endpoint");
  std::vector<int> dist;
  bfs_raw(g, x, dist, *id);
  return dist[y] < 0 ? Distance::unreachable() : Distance::of(dist[y]);
}

std::vector<Edge> bridges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> out;
  int timer = 0;

  // Iterative DFS; frames remember the tree edge used to enter the vertex so
  // the parent edge is skipped by id rather than by endpoint.
  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nbrs = g.neighbors(f.v);
      const auto ids = g.incident_edge_ids(f.v);
      if (f.next < nbrs.size()) {
        const std::size_t k = f.next++;
        if (ids[k] == f.parent_edge) continue;
        const Vertex w = nbrs[k];
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = timer++;
          stack.push_back({w, ids[k], 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const Vertex parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > disc[parent]) out.push_back(g.edge(done.parent_edge));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int component_count(const Graph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> dist;
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[v] >= 0) continue;
    bfs_raw(g, v, dist);
    for (Vertex w = 0; w < g.order(); ++w)
      if (dist[w] >= 0) seen[w] = count;
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_regular(const Graph& g) {
  const auto ext = degree_extremes(g);
  return ext.min_degree == ext.max_degree;
}

DegreeExtremes degree_extremes(const Graph& g) {
  if (g.order() == 0) return {};
  DegreeExtremes out{g.degree(0), g.degree(0)};
  for (Vertex v = 1; v < g.order(); ++v) {
    out.min_degree = std::min(out.min_degree, g.degree(v));
    out.max_degree = std::max(out.max_degree, g.degree(v));
  }
  return out;
}

void require_connected(const Graph& g, const char* operation) {
  if (g.order() == 0) throw Error(ErrorCode::Disconnected, std::string(operation) + ": empty graph");
  const int parts = component_count(g);
  if (parts != 1)
    throw Error(ErrorCode::Disconnected, std::string(operation) + " needs a connected graph; input has " +
                                             std::to_string(parts) + " components (run per component)");
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = static_cast<int>(k);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  return Graph(static_cast<int>(keep.size()), std::span<const Edge>(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), std::span<const Edge>(edges));
}

BaseGraph base_graph(const Graph& g) {
  require_connected(g, "base_graph");
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  std::deque<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  int alive = n;
  Vertex last = 0;
  while (!leaves.empty() && alive > 1) {
    const Vertex v = leaves.front();
    leaves.pop_front();
    if (removed[v] || deg[v] != 1) continue;
    removed[v] = true;
    --alive;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      last = w;
      if (--deg[w] == 1) leaves.push_back(w);
    }
  }

  BaseGraph out;
  out.to_base.assign(static_cast<std::size_t>(n), std::nullopt);
  if (alive <= 1) {
    // Trees collapse completely; keep one survivor as the degenerate marker.
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v]) last = v;
    out.was_tree = true;
    out.graph = Graph(1, std::span<const Edge>());
    out.to_original = {last};
    out.to_base[last] = 0;
    return out;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) continue;
    out.to_base[v] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  out.graph = induced_subgraph(g, out.to_original);
  return out;
}

}  // namespace demkit
