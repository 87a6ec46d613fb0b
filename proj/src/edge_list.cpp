#include "demkit/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace demkit {

namespace {

std::optional<long long> as_integer(const std::string& s) {
  long long value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Vertex LabeledGraph::vertex(const std::string& name) const {
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) throw Error(ErrorCode::BadParameter, "unknown vertex label '" + name + "'");
  return static_cast<Vertex>(it - labels.begin());
}

LabeledGraph with_index_labels(Graph g) {
  LabeledGraph out;
  out.labels.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out.labels.push_back(std::to_string(v));
  out.graph = std::move(g);
  return out;
}

LabeledGraph read_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<std::pair<std::string, std::string>> raw_edges;
  long long n = -1, m = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      const std::string body = trim(t.substr(1));
      const auto eq = body.find('=');
      if (eq != std::string::npos && body.find(' ') > eq)
        header.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      continue;
    }
    std::istringstream fields(t);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) parse_error(line_no, "expected exactly two fields");
    if (n < 0) {
      const auto nn = as_integer(a), mm = as_integer(b);
      if (!nn || !mm || *nn < 0 || *mm < 0) parse_error(line_no, "header must be `n m` with non-negative integers");
      n = *nn;
      m = *mm;
      continue;
    }
    raw_edges.emplace_back(std::move(a), std::move(b));
  }
  if (n < 0) parse_error(line_no, "missing `n m` header");
  if (static_cast<long long>(raw_edges.size()) != m)
    parse_error(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(raw_edges.size()));

  bool numeric = true;
  for (const auto& [a, b] : raw_edges) {
    for (const auto* s : {&a, &b}) {
      const auto v = as_integer(*s);
      if (!v || *v < 0 || *v >= n || std::to_string(*v) != *s) numeric = false;
    }
  }

  LabeledGraph out;
  out.header = std::move(header);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(raw_edges.size());
  if (numeric) {
    for (long long v = 0; v < n; ++v) out.labels.push_back(std::to_string(v));
    for (const auto& [a, b] : raw_edges)
      edges.emplace_back(static_cast<Vertex>(*as_integer(a)), static_cast<Vertex>(*as_integer(b)));
  } else {
    std::unordered_map<std::string, Vertex> ids;
    auto intern = [&](const std::string& s) {
      auto [it, fresh] = ids.emplace(s, static_cast<Vertex>(out.labels.size()));
      if (fresh) out.labels.push_back(s);
      return it->second;
    };
    for (const auto& [a, b] : raw_edges) {
      const Vertex first = intern(a);
      edges.emplace_back(first, intern(b));
    }
    if (static_cast<long long>(out.labels.size()) > n)
      parse_error(line_no, "found " + std::to_string(out.labels.size()) + " distinct labels but n=" + std::to_string(n));
    // Isolated vertices never appear in an edge line; give them fresh names.
    for (long long k = static_cast<long long>(out.labels.size()); k < n; ++k) {
      std::string name = "_" + std::to_string(k);
      while (ids.count(name)) name += "_";
      out.labels.push_back(name);
    }
  }
  try {
    out.graph = Graph(static_cast<int>(n), std::span<const std::pair<Vertex, Vertex>>(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return out;
}

LabeledGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const LabeledGraph& g) {
  for (const auto& [key, value] : g.header) out << "# " << key << '=' << value << '\n';
  out << g.graph.order() << ' ' << g.graph.size() << '\n';
  for (const Edge& e : g.graph.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

std::string format_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace demkit
