#include <algorithm>

#include "demkit/structural.hpp"

namespace demkit {

std::span<const Vertex> LayerProfile::cell(const Cell& c) const {
  auto it = cells.find(c);
  if (it == cells.end()) return {};
  return it->second;
}

LayerProfile layer_profile(const Graph& gb, std::span<const Vertex> sources) {
  if (sources.size() < 2 || sources.size() > 3)
    throw Error(ErrorCode::BadParameter, "layer_profile takes 2 or 3 sources");
  for (std::size_t a = 0; a < sources.size(); ++a) {
    if (!gb.contains(sources[a])) throw Error(ErrorCode::OutOfRange, "source " + std::to_string(sources[a]));
    for (std::size_t b = a + 1; b < sources.size(); ++b)
      if (sources[a] == sources[b]) throw Error(ErrorCode::BadParameter, "sources must be distinct");
  }
  LayerProfile p;
  p.sources.assign(sources.begin(), sources.end());
  p.coord.assign(static_cast<std::size_t>(gb.order()), Cell{0, 0, 0});
  std::vector<int> dist;
  for (std::size_t axis = 0; axis < sources.size(); ++axis) {
    bfs_raw(gb, sources[axis], dist);
    for (Vertex v = 0; v < gb.order(); ++v) {
      if (dist[v] < 0) throw Error(ErrorCode::Disconnected, "layer_profile needs a connected graph");
      p.coord[v][axis] = dist[v];
    }
  }
  for (Vertex v = 0; v < gb.order(); ++v) p.cells[p.coord[v]].push_back(v);
  return p;
}

}  // namespace demkit
