#include "demkit/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

namespace demkit {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadParameter, what); }

// Fixed mapping from mt19937_64 output so instances match across standard
// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

FamilyInstance make(std::string family, std::vector<std::string> params, int n, const std::vector<Edge>& edges) {
  FamilyInstance inst;
  inst.graph = Graph(n, std::span<const Edge>(edges));
  inst.family = std::move(family);
  inst.params = std::move(params);
  return inst;
}

std::vector<std::string> to_params(std::initializer_list<int> xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(std::to_string(x));
  return out;
}

}  // namespace

Vertex FamilyInstance::role(const std::string& name) const {
  auto it = designated.find(name);
  if (it == designated.end()) bad("family " + family + " has no designated vertex '" + name + "'");
  return it->second;
}

FamilyInstance path(int n) {
  if (n < 1) bad("path needs n >= 1");
  std::vector<Edge> edges;
  for (int k = 0; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
  auto inst = make("path", to_params({n}), n, edges);
  inst.designated["end"] = 0;
  return inst;
}

FamilyInstance cycle(int n) {
  if (n < 3) bad("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int k = 0; k < n; ++k) edges.emplace_back(k, (k + 1) % n);
  return make("cycle", to_params({n}), n, edges);
}

FamilyInstance complete(int n) {
  if (n < 1) bad("complete needs n >= 1");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return make("complete", to_params({n}), n, edges);
}

FamilyInstance star(int leaves) {
  if (leaves < 1) bad("star needs at least one leaf");
  std::vector<Edge> edges;
  for (int k = 1; k <= leaves; ++k) edges.emplace_back(0, k);
  auto inst = make("star", to_params({leaves}), leaves + 1, edges);
  inst.designated["center"] = 0;
  return inst;
}

FamilyInstance complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) bad("complete_bipartite needs both parts non-empty");
  std::vector<Edge> edges;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) edges.emplace_back(x, a + y);
  return make("bipartite", to_params({a, b}), a + b, edges);
}

FamilyInstance grid(int p, int q) {
  if (p < 2 || q < 2) bad("grid needs p, q >= 2");
  std::vector<Edge> edges;
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < q; ++c) {
      if (c + 1 < q) edges.emplace_back(r * q + c, r * q + c + 1);
      if (r + 1 < p) edges.emplace_back(r * q + c, (r + 1) * q + c);
    }
  }
  return make("grid", to_params({p, q}), p * q, edges);
}

FamilyInstance hypercube(int d) {
  if (d < 1 || d > 16) bad("hypercube needs 1 <= d <= 16");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
  return make("hypercube", to_params({d}), n, edges);
}

FamilyInstance petersen() {
  std::vector<Edge> edges;
  for (int k = 0; k < 5; ++k) {
    edges.emplace_back(k, (k + 1) % 5);          // outer cycle
    edges.emplace_back(5 + k, 5 + (k + 2) % 5);  // inner pentagram
    edges.emplace_back(k, 5 + k);                // spokes
  }
  return make("petersen", {}, 10, edges);
}

FamilyInstance double_star(int a, int b) {
  if (b < 0 || a < b) bad("double_star needs a >= b >= 0");
  std::vector<Edge> edges{{0, 1}};
  for (int k = 0; k < a; ++k) edges.emplace_back(0, 2 + k);
  for (int k = 0; k < b; ++k) edges.emplace_back(1, 2 + a + k);
  auto inst = make("doublestar", to_params({a, b}), a + b + 2, edges);
  inst.designated["center1"] = 0;
  inst.designated["center2"] = 1;
  return inst;
}

Graph join(const Graph& g, const Graph& h) {
  const int n = g.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) edges.emplace_back(n + e.u, n + e.v);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < h.order(); ++b) edges.emplace_back(a, n + b);
  return Graph(n + h.order(), std::span<const Edge>(edges));
}

FamilyInstance join_with_empty(const Graph& g, int m) {
  if (m < 1) bad("join_with_empty needs m >= 1");
  FamilyInstance inst;
  inst.graph = join(g, Graph(m, std::span<const Edge>()));
  inst.family = "joinempty";
  inst.params = to_params({g.order(), m});
  for (int k = 0; k < m; ++k) inst.designated["apex" + std::to_string(k + 1)] = g.order() + k;
  return inst;
}

FamilyInstance em_k_construction(int n, int k) {
  if (k < 1 || k > n - 1) bad("em_k_construction needs 1 <= k <= n - 1");
  const int extra = n - k - 1;
  if (extra > 0 && k < 2) bad("em_k_construction: F_3 vertices need two edges into F_1, so k >= 2");
  std::vector<Edge> edges;
  for (int x = 1; x <= k; ++x) edges.emplace_back(0, x);
  for (int y = k + 1; y < n; ++y) {
    edges.emplace_back(y, 1);
    edges.emplace_back(y, 2);
  }
  auto inst = make("emk", to_params({n, k}), n, edges);
  inst.designated["v"] = 0;
  return inst;
}

namespace {

FamilyInstance d_family(const char* name, int n, const std::optional<Graph>& d, bool with_u1u2, int min_n) {
  if (n < min_n) bad(std::string(name) + " needs n >= " + std::to_string(min_n));
  const Graph core = d ? *d : Graph(n - 3, std::span<const Edge>());
  if (core.order() != n - 3) bad(std::string(name) + ": D must have n - 3 vertices");
  std::vector<Edge> edges{{0, 1}, {0, 2}};
  if (with_u1u2) edges.emplace_back(1, 2);
  for (int w = 3; w < n; ++w) {
    edges.emplace_back(1, w);
    edges.emplace_back(2, w);
  }
  for (const Edge& e : core.edges()) edges.emplace_back(3 + e.u, 3 + e.v);
  auto inst = make(name, to_params({n}), n, edges);
  inst.designated["v"] = 0;
  inst.designated["u1"] = 1;
  inst.designated["u2"] = 2;
  return inst;
}

}  // namespace

FamilyInstance d1_graph(int n, const std::optional<Graph>& d) { return d_family("d1", n, d, true, 4); }
FamilyInstance d2_graph(int n, const std::optional<Graph>& d) { return d_family("d2", n, d, false, 3); }

FamilyInstance a_d_graph(int d, const std::vector<int>& sizes, std::uint64_t seed, bool intra_edges) {
  if (d < 3) bad("a_d_graph needs d >= 3");
  if (static_cast<int>(sizes.size()) != d - 1) bad("a_d_graph needs |B_2|..|B_d| (d - 1 sizes)");
  for (int i = 2; i <= d; ++i) {
    const int s = sizes[static_cast<std::size_t>(i - 2)];
    if (i < d && s < 2) bad("a_d_graph needs |B_i| >= 2 for 2 <= i <= d - 1");
    if (s < 1) bad("a_d_graph needs |B_d| >= 1");
  }
  Rng rng(seed);
  std::vector<std::vector<Vertex>> layers{{1, 2}};
  int next = 3;
  for (int s : sizes) {
    std::vector<Vertex> layer(static_cast<std::size_t>(s));
    std::iota(layer.begin(), layer.end(), next);
    next += s;
    layers.push_back(std::move(layer));
  }
  std::vector<Edge> edges{{0, 1}, {0, 2}};
  for (std::size_t i = 1; i < layers.size(); ++i) {
    const auto& prev = layers[i - 1];
    for (Vertex x : layers[i]) {
      // Random subset of the previous layer with at least two members.
      std::vector<Vertex> pool = prev;
      for (std::size_t k = pool.size(); k > 1; --k) std::swap(pool[k - 1], pool[rng.below(k)]);
      const std::size_t parents = 2 + rng.below(pool.size() - 1);
      for (std::size_t k = 0; k < parents; ++k) edges.emplace_back(x, pool[k]);
    }
    if (intra_edges) {
      for (std::size_t a = 0; a < layers[i].size(); ++a)
        for (std::size_t b = a + 1; b < layers[i].size(); ++b)
          if (rng.uniform() < 0.3) edges.emplace_back(layers[i][a], layers[i][b]);
    }
  }
  std::vector<std::string> params{std::to_string(d)};
  for (int s : sizes) params.push_back(std::to_string(s));
  auto inst = make("ad", std::move(params), next, edges);
  inst.seed = seed;
  inst.designated["v"] = 0;
  inst.designated["u1"] = 1;
  inst.designated["u2"] = 2;
  validate(inst);
  return inst;
}

Graph random_connected(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1) bad("random_connected needs n >= 1");
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) bad("random_connected needs 0 < p <= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.uniform() < edge_prob) edges.emplace_back(a, b);
    Graph g(n, std::span<const Edge>(edges));
    if (is_connected(g)) return g;
  }
  bad("random_connected: no connected sample after 100000 attempts; raise p");
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) bad("random_tree needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int k = 1; k < n; ++k) edges.emplace_back(k, static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(k))));
  return Graph(n, std::span<const Edge>(edges));
}

void validate(const FamilyInstance& inst) {
  const Graph& g = inst.graph;
  for (const auto& [role, v] : inst.designated)
    if (!g.contains(v)) bad("designated vertex " + role + " is out of range");
  auto fail = [&](const std::string& what) { bad(inst.family + " validator: " + what); };

  if (inst.family == "ad") {
    const int d = std::stoi(inst.params.at(0));
    const Vertex v = inst.role("v");
    std::vector<int> dist;
    bfs_raw(g, v, dist);
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc != d) fail("eccentricity of v is " + std::to_string(ecc) + ", expected " + std::to_string(d));
    if (g.degree(v) != 2 || dist[inst.role("u1")] != 1 || dist[inst.role("u2")] != 1)
      fail("B_1 must be exactly {u1, u2}");
    for (Vertex x = 0; x < g.order(); ++x) {
      if (dist[x] < 2) continue;
      int parents = 0;
      for (Vertex y : g.neighbors(x))
        if (dist[y] == dist[x] - 1) ++parents;
      if (parents < 2) fail("vertex " + std::to_string(x) + " has fewer than two parents");
    }
    for (int i = 2; i <= d; ++i) {
      const auto want = std::stoi(inst.params.at(static_cast<std::size_t>(i - 1)));
      if (std::count(dist.begin(), dist.end(), i) != want) fail("layer " + std::to_string(i) + " has the wrong size");
    }
  } else if (inst.family == "d1" || inst.family == "d2") {
    const Vertex v = inst.role("v"), u1 = inst.role("u1"), u2 = inst.role("u2");
    if (g.degree(v) != 2 || !g.has_edge(v, u1) || !g.has_edge(v, u2)) fail("v must be adjacent to exactly u1, u2");
    if (g.has_edge(u1, u2) != (inst.family == "d1")) fail("u1u2 edge mismatch");
    for (Vertex w = 0; w < g.order(); ++w) {
      if (w == v || w == u1 || w == u2) continue;
      if (!g.has_edge(w, u1) || !g.has_edge(w, u2)) fail("D vertex not adjacent to both u1 and u2");
    }
  } else if (inst.family == "emk") {
    const int k = std::stoi(inst.params.at(1));
    if (g.degree(inst.role("v")) != k) fail("deg(v) != k");
    std::vector<int> dist;
    bfs_raw(g, inst.role("v"), dist);
    for (Vertex y = 0; y < g.order(); ++y) {
      if (dist[y] != 2) continue;
      int into_f1 = 0;
      for (Vertex z : g.neighbors(y))
        if (dist[z] == 1) ++into_f1;
      if (into_f1 < 2) fail("F_3 vertex with fewer than two edges into F_1");
    }
  } else if (inst.family == "doublestar") {
    const int a = std::stoi(inst.params.at(0)), b = std::stoi(inst.params.at(1));
    if (!is_tree(g) || g.degree(inst.role("center1")) != a + 1 || g.degree(inst.role("center2")) != b + 1)
      fail("not a double star S(a, b)");
  }
  if (!is_connected(g)) fail("graph is disconnected");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad("expected an integer parameter, got '" + s + "'");
  return v;
}

FamilyInstance wrap(const char* family, std::vector<std::string> params, Graph g, std::uint64_t seed) {
  FamilyInstance inst;
  inst.graph = std::move(g);
  inst.family = family;
  inst.params = std::move(params);
  inst.seed = seed;
  return inst;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"path",     "cycle",     "complete", "star",   "bipartite",
                                                 "grid",     "hypercube", "petersen", "doublestar", "joinempty",
                                                 "emk",      "d1",        "d2",       "ad",     "random",
                                                 "tree"};
  return names;
}

FamilyInstance generate(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const std::vector<std::string> raw = colon == std::string::npos ? std::vector<std::string>{} : split(spec.substr(colon + 1), ',');
  auto arity = [&](std::size_t want) {
    if (raw.size() != want)
      bad(family + " takes " + std::to_string(want) + " parameter(s), got " + std::to_string(raw.size()));
  };
  auto arg = [&](std::size_t k) { return to_int(raw.at(k)); };

  if (family == "path") return arity(1), path(arg(0));
  if (family == "cycle") return arity(1), cycle(arg(0));
  if (family == "complete") return arity(1), complete(arg(0));
  if (family == "star") return arity(1), star(arg(0));
  if (family == "bipartite") return arity(2), complete_bipartite(arg(0), arg(1));
  if (family == "grid") return arity(2), grid(arg(0), arg(1));
  if (family == "hypercube") return arity(1), hypercube(arg(0));
  if (family == "petersen") return arity(0), petersen();
  if (family == "doublestar") return arity(2), double_star(arg(0), arg(1));
  if (family == "joinempty") {
    // joinempty:n,m is K_n v mK_1
    arity(2);
    return join_with_empty(complete(arg(0)).graph, arg(1));
  }
  if (family == "emk") return arity(2), em_k_construction(arg(0), arg(1));
  if (family == "d1") return arity(1), d1_graph(arg(0));
  if (family == "d2") return arity(1), d2_graph(arg(0));
  if (family == "ad") {
    if (raw.size() < 3) bad("ad takes d followed by |B_2|..|B_d|");
    std::vector<int> sizes;
    for (std::size_t k = 1; k < raw.size(); ++k) sizes.push_back(arg(k));
    return a_d_graph(arg(0), sizes, seed);
  }
  if (family == "random") {
    arity(2);
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(raw[1], &used);
      if (used != raw[1].size()) throw std::invalid_argument(raw[1]);
    } catch (const std::exception&) {
      bad("random: edge probability '" + raw[1] + "' is not a number");
    }
    return wrap("random", raw, random_connected(arg(0), p, seed), seed);
  }
  if (family == "tree") return arity(1), wrap("tree", raw, random_tree(arg(0), seed), seed);
  bad("unknown family '" + family + "'");
}

}  // namespace demkit
