#include "rbl/reservoir.hpp"

#include <algorithm>

#include "rbl/error.hpp"

namespace rbl {

auto BaseSubgraph::repetitions(const Coloring& c) const -> int {
  std::set<ColorId> colors;
  for (const auto& e : edges) colors.insert(c.at(e));
  return static_cast<int>(edges.size()) - static_cast<int>(colors.size());
}

namespace {

auto projection_edge(const EnergyGraph& g, TupleId left, TupleId right, int k) -> Edge {
  return {g.coordinate(left, k), g.coordinate(right, k)};
}

}  // namespace

auto corresponding_structure(const EnergyGraph& g, const Coloring& c, const std::vector<EnergyPair>& witness)
    -> CorrespondingStructure {
  CorrespondingStructure out;
  std::set<TupleId> lefts;
  std::set<TupleId> rights;
  for (auto [l, rt] : witness) {
    if (!g.has_edge(l, rt)) throw InputError("witness edge is not in the energy graph");
    lefts.insert(l);
    rights.insert(rt);
    for (int k = 0; k < g.r; ++k) out.graph.add_edge(projection_edge(g, l, rt, k));
  }
  const auto r = static_cast<std::size_t>(g.r);
  if (out.graph.edges.size() > r * witness.size() || out.graph.a.size() > r * lefts.size() ||
      out.graph.b.size() > r * rights.size()) {
    throw PreconditionError("corresponding structure exceeds projection size bounds");
  }
  out.repetitions = out.graph.repetitions(c);
  return out;
}

auto classify_ordering(const BaseSubgraph& h, const EnergyGraph& g, const Coloring& c,
                       const std::vector<OrderedEdge>& ordering) -> ReservoirLedger {
  ReservoirLedger led;
  BaseSubgraph cur = h;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    const auto& oe = ordering[i];
    const std::string where = " at ordering index " + std::to_string(i);
    if (oe.from.side == oe.to.side) throw InputError("ordered edge joins tuples on one side" + where);
    const TupleId left = oe.from.side == Side::A ? oe.from.id : oe.to.id;
    const TupleId right = oe.from.side == Side::A ? oe.to.id : oe.from.id;
    if (!g.has_edge(left, right)) throw InputError("ordered edge is not in the energy graph" + where);
    for (int k = 0; k < g.r; ++k) {
      if (!cur.has_vertex(oe.from.side, g.coordinate(oe.from.id, k))) {
        throw PreconditionError("ordering is not H-compatible" + where);
      }
    }
    LedgerStep st;
    st.new_side = oe.to.side;
    for (int k = 0; k < g.r; ++k) {
      Edge e = projection_edge(g, left, right, k);
      int nk = 0, sk = 0, dk = 0;
      if (!cur.has_vertex(oe.to.side, g.coordinate(oe.to.id, k))) nk = 1;
      else if (cur.edges.count(e) == 0) sk = 1;
      else dk = 1;
      st.n_flags.push_back(nk);
      st.s_flags.push_back(sk);
      st.d_flags.push_back(dk);
      st.n += nk;
      st.s += sk;
      st.d += dk;
    }
    const int before = cur.repetitions(c);
    for (int k = 0; k < g.r; ++k) cur.add_edge(projection_edge(g, left, right, k));
    st.gain = cur.repetitions(c) - before;
    st.gain_floor = st.n + st.s - (st.d == 0 ? 1 : 0);
    const int idx = static_cast<int>(i);
    if (st.new_side == Side::A) {
      led.index_a.push_back(idx);
      led.n_a += st.n;
      led.s_a += st.s;
      led.d_a += st.d;
    } else {
      led.index_b.push_back(idx);
      led.n_b += st.n;
      led.s_b += st.s;
      led.d_b += st.d;
    }
    led.steps.push_back(std::move(st));
  }
  led.m_a = static_cast<int>(led.index_a.size());
  led.m_b = static_cast<int>(led.index_b.size());
  led.final_graph = std::move(cur);
  return led;
}

auto reservoir_violations(const BaseSubgraph& f, const EnergyGraph& g, const Reservoir& res)
    -> std::vector<std::string> {
  std::vector<std::string> bad;
  for (int k = 0; k < g.r; ++k) {
    if (!f.has_vertex(Side::A, g.coordinate(res.source_a, k))) bad.push_back("source_a not inside F");
    if (!f.has_vertex(Side::B, g.coordinate(res.source_b, k))) bad.push_back("source_b not inside F");
  }
  for (TupleId x : res.over_b) {
    if (!g.has_edge(res.source_a, x)) bad.push_back("source_a not adjacent to a B-side reservoir tuple");
  }
  for (TupleId y : res.over_a) {
    if (!g.has_edge(y, res.source_b)) bad.push_back("source_b not adjacent to an A-side reservoir tuple");
  }
  for (int side = 0; side < 2; ++side) {
    const Side s = side == 0 ? Side::A : Side::B;
    const auto& tuples = side == 0 ? res.over_a : res.over_b;
    std::set<int> used;
    for (TupleId v : tuples) {
      for (int k = 0; k < g.r; ++k) {
        int x = g.coordinate(v, k);
        if (f.has_vertex(s, x)) bad.push_back("reservoir coordinate already in F");
        if (!used.insert(x).second) bad.push_back("reservoir tuples share a coordinate");
      }
    }
  }
  return bad;
}

auto extend_with_reservoir(const BaseSubgraph& f, const EnergyGraph& g, const Coloring& c,
                           const Reservoir& res, int d1, int d2) -> Extension {
  if (d1 < 0 || d2 < 0) throw InputError("extension sizes must be nonnegative");
  if (d1 > g.r * static_cast<int>(res.over_a.size()) || d2 > g.r * static_cast<int>(res.over_b.size())) {
    throw InputError("extension exceeds reservoir capacity");
  }
  if (auto bad = reservoir_violations(f, g, res); !bad.empty()) {
    throw PreconditionError("invalid reservoir: " + bad.front());
  }
  Extension out{f, 0, 0};
  // A-side tuples attach to source_b, B-side tuples to source_a.
  auto attach = [&](const std::vector<TupleId>& stock, int d, bool over_a) {
    const int whole = d / g.r;
    const int rest = d % g.r;
    for (int x = 0; x < whole + (rest ? 1 : 0); ++x) {
      const int take = x < whole ? g.r : rest;
      for (int k = 0; k < take; ++k) {
        TupleId left = over_a ? stock[x] : res.source_a;
        TupleId right = over_a ? res.source_b : stock[x];
        out.graph.add_edge(projection_edge(g, left, right, k));
      }
    }
  };
  attach(res.over_a, d1, true);
  attach(res.over_b, d2, false);
  out.gain = out.graph.repetitions(c) - f.repetitions(c);
  out.gain_floor = d1 * (g.r - 1) / g.r + d2 * (g.r - 1) / g.r;
  return out;
}

}  // namespace rbl
