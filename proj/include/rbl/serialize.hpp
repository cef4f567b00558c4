#pragma once

#include "rbl/bounds.hpp"
#include "rbl/constructions.hpp"
#include "rbl/energy.hpp"
#include "rbl/exact.hpp"
#include "rbl/io.hpp"
#include "rbl/verifier.hpp"

namespace rbl {

auto to_json(const ConstructionResult& r) -> Json;
auto to_json(const VerifyResult& r) -> Json;
auto to_json(const ExactResult& r) -> Json;
auto to_json(const BoundReport& r) -> Json;
auto to_json(const FormulaPrediction& p) -> Json;

// Edge counts and bound checks; the edge list itself is omitted.
auto energy_summary(const EnergyGraph& g, const Coloring& c) -> Json;
auto to_json(const PrunedReport& r, const Coloring& c) -> Json;
// Edges with decoded tuple vertices.
auto energy_edge_list(const EnergyGraph& g) -> Json;

}  // namespace rbl
