#include "rbl/serialize.hpp"

namespace rbl {

auto to_json(const ConstructionResult& r) -> Json {
  Json params = Json::object();
  for (const auto& [k, v] : r.provenance.params) params[k] = v;
  Json prov{{"name", r.provenance.name}, {"params", std::move(params)}};
  prov["seed"] = r.provenance.seed ? Json(*r.provenance.seed) : Json(nullptr);
  Json claim = to_json(r.claimed_spec);
  claim["palette"] = r.claimed_palette;
  return Json{{"coloring", to_json(r.coloring)},
              {"claim", std::move(claim)},
              {"measured_palette", r.coloring.palette_size()},
              {"provenance", std::move(prov)},
              {"warnings", r.warnings}};
}

auto to_json(const VerifyResult& r) -> Json {
  Json j{{"status", to_string(r.status)}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["observed_colors"] = r.observed_colors ? Json(*r.observed_colors) : Json(nullptr);
  return j;
}

auto to_json(const ExactResult& r) -> Json {
  Json probes = Json::array();
  for (const auto& p : r.probes) {
    probes.push_back(Json{{"colors", p.colors}, {"decision", to_string(p.decision)}, {"nodes", p.nodes}});
  }
  Json j{{"status", to_string(r.status)}, {"lo", r.lo}, {"hi", r.hi}, {"probes", std::move(probes)},
         {"nodes", r.nodes}};
  j["value"] = r.value() ? Json(*r.value()) : Json(nullptr);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

auto to_json(const BoundReport& r) -> Json {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j{{"name", e.name}, {"kind", e.kind}, {"formula", e.formula}, {"source", e.source},
           {"via_monotonicity", e.via_monotonicity}};
    if (e.exponent) {
      j["exponent"] = to_string(*e.exponent);
      j["exponent_value"] = to_double(*e.exponent);
    } else {
      j["exponent"] = nullptr;
      j["exponent_value"] = nullptr;
    }
    entries.push_back(std::move(j));
  }
  return Json{{"s", r.s}, {"t", r.t}, {"q", r.q}, {"region", r.region}, {"entries", std::move(entries)}};
}

auto to_json(const FormulaPrediction& p) -> Json {
  return Json{{"source", p.source}, {"value", p.value}, {"asymptotic", p.asymptotic}};
}

auto energy_summary(const EnergyGraph& g, const Coloring& c) -> Json {
  const auto edges = static_cast<long long>(g.edges.size());
  Json j{{"n", g.n},
         {"r", g.r},
         {"stage", to_string(g.stage)},
         {"edges", edges},
         {"palette", c.palette_size()},
         {"max_star", g.max_star}};
  if (g.stage == EnergyStage::Raw && edges >= static_cast<long long>(g.n) * g.n) {
    j["lower_bound_colors"] = energy_lower_bound_colors(edges, g.n, g.r);
    j["bound_holds"] = energy_bound_holds(edges, g.n, g.r, c.palette_size());
  }
  return j;
}

auto to_json(const PrunedReport& r, const Coloring& c) -> Json {
  Json j = energy_summary(r.graph, c);
  j["raw_edges"] = r.raw_edges;
  j["partitioned_edges"] = r.partitioned_edges;
  j["rare_edges"] = r.rare_edges;
  j["final_edges"] = r.final_edges;
  j["retained_fraction"] = r.retained_fraction;
  j["rare_threshold"] = r.graph.rare_threshold;
  j["partition_below_target"] = r.graph.partition_below_target;
  j["conflict_below_target"] = r.graph.conflict_below_target;
  j["violations"] = r.violations;
  return j;
}

auto energy_edge_list(const EnergyGraph& g) -> Json {
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back(Json{{"left", g.decode(e.left)}, {"right", g.decode(e.right)}, {"color", e.color}});
  }
  return Json{{"n", g.n}, {"r", g.r}, {"stage", to_string(g.stage)}, {"edges", std::move(edges)}};
}

}  // namespace rbl
