#include "demkit/report.hpp"

#include <charconv>

namespace demkit::report {

Json vertex(const LabeledGraph& g, Vertex v) {
  const std::string& label = g.label(v);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
  if (ec == std::errc() && ptr == label.data() + label.size() && std::to_string(value) == label) return value;
  return label;
}

Json edge(const LabeledGraph& g, Edge e) { return Json::array({vertex(g, e.u), vertex(g, e.v)}); }

Json vertices(const LabeledGraph& g, std::span<const Vertex> vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(vertex(g, v));
  return out;
}

Json em_set(const LabeledGraph& g, const EmSet& em) {
  Json edges = Json::array();
  for (const Edge& e : em.edges) edges.push_back(edge(g, e));
  return Json{{"monitor", vertex(g, em.monitor)}, {"edges", std::move(edges)}, {"size", em.size()}};
}

Json p_set(const LabeledGraph& g, std::span<const Vertex> monitors, Edge e, const PairSet& ps) {
  Json pairs = Json::array();
  for (const auto& p : ps.pairs) pairs.push_back(Json::array({vertex(g, p.monitor), vertex(g, p.target)}));
  return Json{{"monitors", vertices(g, monitors)}, {"edge", edge(g, e)}, {"pairs", std::move(pairs)}, {"size", ps.size()}};
}

Json certificate(const LabeledGraph& g, const MonitoringCertificate& cert) {
  Json witnesses = Json::object();
  for (const auto& [e, w] : cert.witnesses)
    witnesses[g.label(e.u) + "," + g.label(e.v)] = Json::array({vertex(g, w.monitor), vertex(g, w.target)});
  Json uncovered = Json::array();
  for (const Edge& e : cert.uncovered) uncovered.push_back(edge(g, e));
  return Json{{"witnesses", std::move(witnesses)}, {"uncovered", std::move(uncovered)}};
}

Json dem_result(const LabeledGraph& g, const DemResult& r) {
  return Json{{"value", r.value},
              {"monitor_set", vertices(g, r.monitor_set)},
              {"exact", r.exact},
              {"method", std::string(to_string(r.method))},
              {"stats", Json{{"nodes", r.stats.nodes}, {"millis", r.stats.millis}}}};
}

Json bounds(const LabeledGraph& g, const BoundsReport& b) {
  Json out{{"n", b.n}, {"m", b.m}, {"density_lb", b.density_lb}};
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) out[key] = *v;
  };
  put("clique_number", b.clique_number);
  put("clique_lb", b.clique_lb);
  put("vertex_cover_ub", b.vertex_cover_ub);
  put("independence_number", b.independence_number);
  put("gallai_ub", b.gallai_ub);
  put("feedback_ub", b.feedback_ub);
  put("regular_lb", b.regular_lb);
  out["lower_bound"] = b.lower_bound();
  out["upper_bound"] = b.upper_bound();
  Json per = Json::object();
  for (Vertex v = 0; v < static_cast<Vertex>(b.em_per_vertex.size()); ++v) per[g.label(v)] = b.em_per_vertex[v];
  out["em_per_vertex"] = std::move(per);
  return out;
}

Json condition_report(const LabeledGraph& g, const ConditionReport& r) {
  Json conditions = Json::array();
  for (const auto& c : r.conditions) {
    Json item{{"name", c.name}, {"pass", c.pass}};
    if (!c.evaluated) item["evaluated"] = false;
    if (c.witness) item["witness"] = vertices(g, *c.witness);
    conditions.push_back(std::move(item));
  }
  return Json{{"tuple", vertices(g, r.tuple)},
              {"conditions", std::move(conditions)},
              {"direct_check", r.direct_check},
              {"discrepancy", r.discrepancy}};
}

}  // namespace demkit::report
