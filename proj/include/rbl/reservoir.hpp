#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rbl/core.hpp"
#include "rbl/energy.hpp"

namespace rbl {

// Subgraph of the base K_{n,n}; vertex sets may contain isolated vertices.
struct BaseSubgraph {
  std::set<int> a;
  std::set<int> b;
  std::set<Edge> edges;

  void add_edge(Edge e) {
    a.insert(e.a);
    b.insert(e.b);
    edges.insert(e);
  }
  auto has_vertex(Side s, int v) const -> bool { return (s == Side::A ? a : b).count(v) > 0; }
  auto repetitions(const Coloring& c) const -> int;
};

struct CorrespondingStructure {
  BaseSubgraph graph;
  int repetitions = 0;
};

using EnergyPair = std::pair<TupleId, TupleId>;  // (left tuple, right tuple)

auto corresponding_structure(const EnergyGraph& g, const Coloring& c, const std::vector<EnergyPair>& witness)
    -> CorrespondingStructure;

struct TupleVertex {
  Side side;
  TupleId id;
};

// Energy edge traversed from an already placed endpoint to `to`.
struct OrderedEdge {
  TupleVertex from;
  TupleVertex to;
};

struct LedgerStep {
  Side new_side = Side::A;
  std::vector<int> n_flags;
  std::vector<int> s_flags;
  std::vector<int> d_flags;
  int n = 0;
  int s = 0;
  int d = 0;
  int gain = 0;        // measured repetition increase of this step
  int gain_floor = 0;  // n + s - [d == 0]
};

struct ReservoirLedger {
  std::vector<LedgerStep> steps;
  std::vector<int> index_a;  // steps whose new endpoint lies on the A side
  std::vector<int> index_b;
  int n_a = 0, s_a = 0, d_a = 0;
  int n_b = 0, s_b = 0, d_b = 0;
  int m_a = 0;
  int m_b = 0;
  BaseSubgraph final_graph;
};

auto classify_ordering(const BaseSubgraph& h, const EnergyGraph& g, const Coloring& c,
                       const std::vector<OrderedEdge>& ordering) -> ReservoirLedger;

struct Reservoir {
  std::vector<TupleId> over_a;  // tuples over A, joined to source_b
  std::vector<TupleId> over_b;  // tuples over B, joined to source_a
  TupleId source_a = 0;
  TupleId source_b = 0;
};

auto reservoir_violations(const BaseSubgraph& f, const EnergyGraph& g, const Reservoir& res)
    -> std::vector<std::string>;

struct Extension {
  BaseSubgraph graph;
  int gain = 0;
  int gain_floor = 0;
};

auto extend_with_reservoir(const BaseSubgraph& f, const EnergyGraph& g, const Coloring& c,
                           const Reservoir& res, int d1, int d2) -> Extension;

}  // namespace rbl
