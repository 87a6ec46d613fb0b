#pragma once

#include <span>

#include <json.hpp>

#include "demkit/edge_list.hpp"
#include "demkit/monitor.hpp"
#include "demkit/solvers.hpp"
#include "demkit/structural.hpp"

namespace demkit::report {

using Json = nlohmann::ordered_json;

/// A vertex as it appeared in the input: integer labels stay integers.
Json vertex(const LabeledGraph& g, Vertex v);
Json edge(const LabeledGraph& g, Edge e);
Json vertices(const LabeledGraph& g, std::span<const Vertex> vs);

/// {monitor, edges[], size}
Json em_set(const LabeledGraph& g, const EmSet& em);
/// {monitors[], edge, pairs[], size}
Json p_set(const LabeledGraph& g, std::span<const Vertex> monitors, Edge e, const PairSet& ps);
/// {witnesses{"u,v": [monitor, target]}, uncovered[]}
Json certificate(const LabeledGraph& g, const MonitoringCertificate& cert);
/// {value, monitor_set[], exact, method, stats{nodes, millis}}
Json dem_result(const LabeledGraph& g, const DemResult& r);
/// Every computed bound; guarded fields that were skipped are omitted.
Json bounds(const LabeledGraph& g, const BoundsReport& b);
/// {tuple[], conditions[{name, pass, witness?}], direct_check, discrepancy}
Json condition_report(const LabeledGraph& g, const ConditionReport& r);

}  // namespace demkit::report
