#include <algorithm>
#include <functional>

#include "demkit/monitor.hpp"
#include "demkit/parallel.hpp"
#include "demkit/structural.hpp"

namespace demkit {

namespace {

// A forbidden configuration: a centre x plus roles, each adjacent to an
// earlier vertex (anchor 0 is x) and lying in one of `offsets`, measured
// relative to the cell of x. All vertices must be distinct.
struct Role {
  int anchor = 0;
  std::vector<Cell> offsets;
};

struct Pattern {
  std::vector<Role> roles;
  /// Every coordinate of x's cell must be at least this.
  int min_coord = 0;
};

struct Rule {
  std::string name;
  std::vector<Pattern> alternatives;
};

Cell operator+(const Cell& a, const Cell& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

class Matcher {
 public:
  Matcher(const Graph& g, const LayerProfile& p, int axes) : g_(g), p_(p), axes_(axes) {}

  std::optional<std::vector<Vertex>> find(const Pattern& pat) const {
    std::vector<Vertex> assigned;
    for (Vertex x = 0; x < g_.order(); ++x) {
      const Cell& cx = p_.of(x);
      bool low = false;
      for (int a = 0; a < axes_; ++a) low = low || cx[a] < pat.min_coord;
      if (low) continue;
      assigned.assign(1, x);
      if (extend(pat, assigned)) return assigned;
    }
    return std::nullopt;
  }

 private:
  bool extend(const Pattern& pat, std::vector<Vertex>& assigned) const {
    const std::size_t depth = assigned.size() - 1;
    if (depth == pat.roles.size()) return true;
    const Role& role = pat.roles[depth];
    const Cell& cx = p_.of(assigned[0]);
    for (Vertex y : g_.neighbors(assigned[static_cast<std::size_t>(role.anchor)])) {
      if (std::find(assigned.begin(), assigned.end(), y) != assigned.end()) continue;
      const Cell& cy = p_.of(y);
      const bool fits = std::any_of(role.offsets.begin(), role.offsets.end(),
                                    [&](const Cell& off) { return cx + off == cy; });
      if (!fits) continue;
      assigned.push_back(y);
      if (extend(pat, assigned)) return true;
      assigned.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const LayerProfile& p_;
  int axes_;
};

std::vector<ConditionResult> evaluate(const Graph& gb, const LayerProfile& profile, int axes,
                                      const std::vector<Rule>& rules, const std::set<std::string>& disabled) {
  Matcher matcher(gb, profile, axes);
  std::vector<ConditionResult> out;
  for (const Rule& rule : rules) {
    ConditionResult res;
    res.name = rule.name;
    if (disabled.count(rule.name)) {
      res.evaluated = false;
      out.push_back(std::move(res));
      continue;
    }
    for (const Pattern& pat : rule.alternatives) {
      if (auto hit = matcher.find(pat)) {
        res.pass = false;
        res.witness = std::move(hit);
        break;
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

Pattern star(std::vector<std::vector<Cell>> sets, int min_coord = 0) {
  Pattern p;
  p.min_coord = min_coord;
  for (auto& s : sets) p.roles.push_back({0, std::move(s)});
  return p;
}

std::vector<Rule> make_dem2_rules(Dem2Reading reading) {
  std::vector<Rule> r;
  r.push_back({"1", {star({{{0, 0, 0}}})}});
  // At most one neighbour in each of the four unions.
  const std::vector<std::vector<Cell>> unions = {
      {{-1, 0, 0}, {-1, -1, 0}},
      {{-1, 0, 0}, {-1, 1, 0}},
      {{0, -1, 0}, {-1, -1, 0}},
      {{0, -1, 0}, {1, -1, 0}},
  };
  Rule two{"2", {}};
  for (std::size_t k = 0; k < unions.size(); ++k) {
    const auto& u = unions[k];
    if (reading == Dem2Reading::Repaired && (k == 1 || k == 3)) {
      // Two neighbours in the diagonal cell alone are left to condition (3).
      two.alternatives.push_back(star({{u[0]}, u}));
    } else {
      two.alternatives.push_back(star({u, u}));
    }
  }
  r.push_back(two);
  // Path z x y z'.
  Pattern path;
  path.min_coord = 1;
  path.roles = {
      {0, {{-1, 1, 0}}},               // y
      {0, {{-1, -1, 0}, {-1, 1, 0}}},  // z
      {1, {{-2, 0, 0}, {0, 0, 0}}},    // z' next to y
  };
  r.push_back({"3", {path}});
  r.push_back({"4", {star({{{-1, 1, 0}}, {{-1, -1, 0}}, {{1, -1, 0}}}, 1)}});
  return r;
}

const std::vector<Rule>& dem2_rules(Dem2Reading reading) {
  static const std::vector<Rule> as_stated = make_dem2_rules(Dem2Reading::AsStated);
  static const std::vector<Rule> repaired = make_dem2_rules(Dem2Reading::Repaired);
  return reading == Dem2Reading::AsStated ? as_stated : repaired;
}

std::vector<Cell> box(std::initializer_list<int> is, std::initializer_list<int> js, std::initializer_list<int> ks) {
  std::vector<Cell> out;
  for (int i : is)
    for (int j : js)
      for (int k : ks) out.push_back({i, j, k});
  return out;
}

const std::vector<Rule>& dem3_rules() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> r;
    r.push_back({"1", {star({{{0, 0, 0}}})}});

    Rule two{"2", {}};
    for (const Cell& c : box({-1, 0}, {-1, 0}, {-1, 0})) two.alternatives.push_back(star({{c}, {c}}));
    r.push_back(two);

    // Neighbour y in the first cell forbids a neighbour y' in the listed
    // cells. Lists are copied as written, duplicates included.
    r.push_back({"3.1", {star({{{0, -1, 0}}, box({-1, 0, 1}, {-1}, {-1, 0, 1})})}});
    r.push_back({"3.2", {star({{{-1, -1, -1}}, box({-1, 0}, {-1, 0}, {-1, 0})})}});
    r.push_back({"3.3", {star({{{-1, 1, -1}}, {{-1, 0, -1}, {-1, 0, 0}, {-1, 0, -1}, {-1, 0, -1}, {0, 0, -1}}})}});
    r.push_back({"3.4", {star({{{0, -1, -1}}, {{-1, -1, -1}, {0, -1, -1}, {0, 0, -1}, {0, -1, 0}, {1, -1, -1}}})}});
    r.push_back({"3.5", {star({{{0, -1, 1}}, {{0, -1, 0}, {0, -1, 0}}})}});

    Pattern p41;
    p41.roles = {
        {0, {{-1, 1, 1}}},                                  // y
        {0, box({-1}, {-1, 1}, {-1, 1})},                   // z1 next to x
        {1, {{-2, 0, 0}, {0, 0, 0}}},                       // z2 next to y
    };
    r.push_back({"4.1", {p41}});
    Pattern p42;
    p42.roles = {
        {0, {{-1, 1, 1}}},
        {0, box({-1}, {-1, 1}, {-1})},
        {1, box({-2, 0}, {0}, {-2, 0})},
    };
    r.push_back({"4.2", {p42}});
    Pattern p43;
    p43.roles = {
        {0, {{0, -1, 1}}},  // y
        {0, {{-1, -1, -1}, {-1, -1, 0}, {-1, -1, 1}, {0, -1, -1}, {0, -1, 1}, {1, -1, -1}, {1, -1, 0}, {1, -1, 1}}},
        {1, {{-1, -2, 0}, {-1, -1, 0}, {-1, 0, 0}, {0, -2, 0}, {0, 0, 0}, {1, -2, 0}, {1, -1, 0}, {1, 0, 0}}},
    };
    r.push_back({"4.3", {p43}});

    // Neighbours in all three of the listed sets.
    r.push_back({"5", {star({{{-1, -1, -1}}, {{1, -1, -1}}, box({-1}, {1}, {-1, 0, 1})})}});

    r.push_back({"6",
                 {star({{{-1, -1, -1}},
                        {{-1, -1, 1}, {-1, 0, 1}, {-1, 1, -1}, {-1, 1, 0}, {-1, 1, 1}},
                        {{-1, -1, 1}, {0, -1, 1}, {1, -1, -1}, {1, -1, 0}, {1, -1, 1}},
                        {{-1, 1, -1}, {0, 1, -1}, {1, -1, -1}, {1, 0, -1}, {1, 1, -1}}})}});

    Pattern p71;
    p71.roles = {
        {0, {{-1, 1, -1}}},  // y
        {0, {{-1, -1, -1}, {-1, -1, 0}, {-1, -1, 1}, {-1, 0, 1}, {-1, 1, -1}, {-1, 1, 0}, {-1, 1, 1}}},  // z1
        {0, {{-1, -1, -1}, {-1, 1, -1}, {0, -1, -1}, {0, 1, -1}, {1, -1, -1}, {1, 0, -1}, {1, 1, -1}}},  // z3
        {1, {{-2, 0, -2}, {-2, 0, -1}, {-2, 0, 0}, {-1, 0, -2}, {-1, 0, 0}, {0, 0, -2}, {0, 0, -1}, {0, 0, 0}}},  // z2
    };
    r.push_back({"7.1", {p71}});
    Pattern p72;
    p72.roles = {
        {0, {{1, -1, -1}}},  // y
        {0, {{-1, -1, -1}, {-1, -1, 0}, {-1, -1, 1}, {0, -1, -1}, {0, -1, 0}, {1, -1, 1}, {1, -1, -1}, {1, -1, 0},
             {1, -1, 1}}},  // z2
        {0, {{-1, -1, -1}, {-1, 0, -1}, {-2, 1, -1}, {0, -1, -1}, {0, 0, -1}, {0, 1, -1}, {1, -1, -1}, {1, 0, -1},
             {1, 1, -1}}},  // z3
        {1, {{0, -2, -2}, {0, -2, -1}, {0, -2, 0}, {0, -1, -2}, {0, -1, 0}, {0, 0, -2}, {0, 0, -1}}},  // z1
    };
    r.push_back({"7.2", {p72}});

    r.push_back({"8",
                 {star({{{0, -1, -1}},
                        {{-1, -1, 0}, {-1, -1, 1}, {0, -1, 1}, {1, -1, 0}, {1, -1, 1}},
                        {{-1, 0, -1}, {-1, 1, -1}, {0, 1, -1}, {1, 0, -1}, {1, 1, -1}}})}});
    return r;
  }();
  return rules;
}

bool direct_check(const Graph& gb, std::span<const Vertex> tuple) {
  return is_monitoring_set(gb, tuple).is_monitoring_set();
}

}  // namespace

bool ConditionReport::structural_pass() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const ConditionResult& c) { return c.pass; });
}

ConditionReport dem2_pair_check(const Graph& gb, Vertex u, Vertex v, Dem2Reading reading) {
  const std::array<Vertex, 2> tuple{u, v};
  const LayerProfile profile = layer_profile(gb, tuple);
  ConditionReport report;
  report.tuple.assign(tuple.begin(), tuple.end());
  report.conditions = evaluate(gb, profile, 2, dem2_rules(reading), {});
  report.direct_check = direct_check(gb, tuple);
  report.discrepancy = report.structural_pass() != report.direct_check;
  return report;
}

std::optional<std::pair<Vertex, Vertex>> dem_is_2(const Graph& g, Dem2Reading reading) {
  require_connected(g, "dem_is_2");
  if (is_tree(g)) throw Error(ErrorCode::IsTree, "dem_is_2: trees have dem = 1");
  const BaseGraph base = base_graph(g);
  const Graph& gb = base.graph;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < gb.order(); ++a)
    for (Vertex b = a + 1; b < gb.order(); ++b) pairs.emplace_back(a, b);
  std::vector<char> pass(pairs.size(), 0);
  parallel_for(static_cast<int>(pairs.size()), [&](int k) {
    const std::array<Vertex, 2> tuple{pairs[k].first, pairs[k].second};
    const auto conds = evaluate(gb, layer_profile(gb, tuple), 2, dem2_rules(reading), {});
    pass[k] = std::all_of(conds.begin(), conds.end(), [](const ConditionResult& c) { return c.pass; });
  });
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pass[k]) return std::pair{base.to_original[pairs[k].first], base.to_original[pairs[k].second]};
  return std::nullopt;
}

const std::vector<std::string>& dem3_rule_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Rule& r : dem3_rules()) out.push_back(r.name);
    return out;
  }();
  return names;
}

ConditionReport dem3_triple_check(const Graph& gb, Vertex u, Vertex v, Vertex w,
                                  const std::set<std::string>& disabled) {
  const std::array<Vertex, 3> tuple{u, v, w};
  const LayerProfile profile = layer_profile(gb, tuple);
  ConditionReport report;
  report.tuple.assign(tuple.begin(), tuple.end());
  report.conditions = evaluate(gb, profile, 3, dem3_rules(), disabled);
  report.direct_check = direct_check(gb, tuple);
  report.discrepancy = report.structural_pass() != report.direct_check;
  return report;
}

}  // namespace demkit
