#include "rbl/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <optional>

#include "rbl/error.hpp"
#include "rbl/serialize.hpp"
#include "rbl/store.hpp"

namespace rbl::cli {

namespace {

struct Common {
  std::optional<std::string> out_path;
  std::optional<std::string> store;
  int jobs = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out_path, "write the JSON report to this file");
  sub->add_option("--store", c.store, "append a result record to this JSONL store");
  sub->add_option("--jobs", c.jobs, "OpenMP threads (0 = default)");
}

void emit(const Json& j, const Common& c, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (c.out_path) write_text_file(*c.out_path, text);
  else out << text;
}

void store_record(const Common& c, RecordKey key, const Json& payload) {
  if (auto path = resolve_store_path(c.store)) append_record(*path, {std::move(key), payload, utc_timestamp()});
}

auto make_construction(const std::string& kind, int n, int s, int t, int q, std::optional<int> ell, int samples,
                       std::uint64_t seed) -> ConstructionResult {
  if (kind == "star-i") return star_upper_i(n, t, q);
  if (kind == "star-ii") return star_upper_ii(n, t, q);
  if (kind == "star-refined") return star_upper_refined(n, t, q);
  if (kind == "near-rainbow-pairs") return near_rainbow_pairs(n, s, t);
  if (kind == "near-rainbow-pairs-odd") return near_rainbow_pairs_odd(n, s, t);
  if (kind == "k89") return k89_block(n);
  if (kind == "hypergraph") {
    HypergraphConfig cfg;
    cfg.n = n;
    cfg.s = s;
    cfg.t = t;
    cfg.ell = ell;
    cfg.samples = samples;
    cfg.seed = seed;
    return hypergraph_coloring(cfg);
  }
  throw InputError("unknown construction kind " + kind);
}

}  // namespace

auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int {
  CLI::App app{"Generalized Ramsey numbers of complete bipartite graphs", "rbl"};
  app.require_subcommand(1);
  Common common;
  std::function<int()> action;

  auto* construct = app.add_subcommand("construct", "build a coloring and its claimed guarantee");
  std::string kind;
  int n = 0, s = 1, t = 1, q = 2, samples = 0;
  std::optional<int> ell;
  std::uint64_t seed = 1;
  construct->add_option("kind,--kind", kind, "construction name")
      ->required()
      ->check(CLI::IsMember({"star-i", "star-ii", "star-refined", "near-rainbow-pairs", "near-rainbow-pairs-odd",
                             "k89", "hypergraph"}));
  construct->add_option("--n", n)->required();
  construct->add_option("--s", s);
  construct->add_option("--t", t);
  construct->add_option("--q", q);
  construct->add_option("--ell", ell);
  construct->add_option("--samples", samples);
  construct->add_option("--seed", seed);
  add_common(construct, common);
  construct->callback([&] {
    action = [&] {
      const auto res = make_construction(kind, n, s, t, q, ell, samples, seed);
      const Json j = to_json(res);
      const std::uint64_t key_seed = res.provenance.seed.value_or(0);
      store_record(common,
                   {res.coloring.n(), res.claimed_spec.s, res.claimed_spec.t, res.claimed_spec.q,
                    "construct:" + kind, key_seed},
                   j);
      emit(j, common, out);
      for (const auto& w : res.warnings) err << "warning: " << w << "\n";
      return 0;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "check every copy of K_{s,t} sees at least q colors");
  std::string coloring_path;
  verify_cmd->add_option("--coloring", coloring_path)->required();
  verify_cmd->add_option("--s", s)->required();
  verify_cmd->add_option("--t", t)->required();
  verify_cmd->add_option("--q", q)->required();
  add_common(verify_cmd, common);
  verify_cmd->callback([&] {
    action = [&] {
      const Coloring c = coloring_from_json(read_json_file(coloring_path));
      const PatternSpec spec = PatternSpec::make(s, t, q);
      const VerifyResult res = verify(c, spec, common.jobs);
      Json j = to_json(res);
      j["n"] = c.n();
      j["palette"] = c.palette_size();
      j["spec"] = to_json(spec);
      store_record(common, {c.n(), s, t, q, "verify", 0}, j);
      emit(j, common, out);
      switch (res.status) {
        case VerifyStatus::Valid: return 0;
        case VerifyStatus::Violation: return 1;
        case VerifyStatus::VacuouslyValid: return 2;
      }
      return 0;
    };
  });

  auto* exact_cmd = app.add_subcommand("exact", "compute r(K_{n,n}, K_{s,t}, q) by exhaustive search");
  SearchBudget budget;
  bool no_symmetry = false;
  exact_cmd->add_option("--n", n)->required();
  exact_cmd->add_option("--s", s)->required();
  exact_cmd->add_option("--t", t)->required();
  exact_cmd->add_option("--q", q)->required();
  exact_cmd->add_option("--node-limit", budget.node_limit);
  exact_cmd->add_option("--time-limit", budget.time_limit);
  exact_cmd->add_flag("--no-row-col-symmetry", no_symmetry);
  add_common(exact_cmd, common);
  exact_cmd->callback([&] {
    action = [&] {
      budget.row_col_symmetry = !no_symmetry;
      const ExactResult res = exact_r(n, PatternSpec::make(s, t, q), budget);
      const Json j = to_json(res);
      store_record(common, {n, s, t, q, "exact", 0}, j);
      emit(j, common, out);
      return res.status == ExactStatus::Exact ? 0 : kExitResource;
    };
  });

  auto* energy_cmd = app.add_subcommand("energy", "build the color energy graph of a coloring");
  int r = 2;
  bool pruned = false;
  std::optional<int> threshold, ell_star;
  std::string emit_mode = "stats";
  energy_cmd->add_option("--coloring", coloring_path)->required();
  energy_cmd->add_option("--emit", emit_mode)->check(CLI::IsMember({"stats", "graph"}));
  energy_cmd->add_option("--r", r);
  energy_cmd->add_flag("--pruned", pruned);
  energy_cmd->add_option("--seed", seed);
  energy_cmd->add_option("--threshold", threshold);
  energy_cmd->add_option("--ell-star", ell_star);
  add_common(energy_cmd, common);
  energy_cmd->callback([&] {
    action = [&] {
      const Coloring c = coloring_from_json(read_json_file(coloring_path));
      Json j;
      EnergyGraph g;
      if (pruned) {
        PrunedConfig cfg;
        cfg.seed = seed;
        cfg.threshold = threshold;
        cfg.ell_star = ell_star;
        auto rep = pruned_energy(c, r, cfg);
        j = to_json(rep, c);
        g = std::move(rep.graph);
      } else {
        g = build_energy(c, r, common.jobs);
        j = energy_summary(g, c);
      }
      if (emit_mode == "graph") j = energy_edge_list(g);
      store_record(common, {c.n(), 0, 0, 0, pruned ? "energy:pruned" : "energy", pruned ? seed : 0}, j);
      emit(j, common, out);
      return 0;
    };
  });

  auto* bounds_cmd = app.add_subcommand("bounds", "list the known bounds for (s, t, q)");
  std::optional<int> formula_n;
  bounds_cmd->add_option("--s", s)->required();
  bounds_cmd->add_option("--t", t)->required();
  bounds_cmd->add_option("--q", q)->required();
  bounds_cmd->add_option("--n", formula_n, "also evaluate closed forms at this n");
  add_common(bounds_cmd, common);
  bounds_cmd->callback([&] {
    action = [&] {
      Json j = to_json(threshold_classify(s, t, q));
      if (formula_n) {
        Json preds = Json::array();
        for (const auto& f : exact_formulas(*formula_n, s, t, q)) preds.push_back(to_json(f));
        j["formulas"] = std::move(preds);
      }
      store_record(common, {formula_n.value_or(0), s, t, q, "bounds", 0}, j);
      emit(j, common, out);
      return 0;
    };
  });

  auto* lemmas = app.add_subcommand("check-lemmas", "run the set-family and integer lemma checks");
  std::string which;
  std::optional<int> seeds;
  int s_max = 200, t_max = 600;
  lemmas->add_option("--which", which)->required()->check(CLI::IsMember({"corradi", "gen-corradi", "a1"}));
  lemmas->add_option("--seeds", seeds);
  lemmas->add_option("--s-max", s_max);
  lemmas->add_option("--t-max", t_max);
  add_common(lemmas, common);
  lemmas->callback([&] {
    action = [&] {
      Json violations = Json::array();
      long long checked = 0;
      if (which == "a1") {
        for (auto [vs, vt] : lemma_a1_check(s_max, t_max)) violations.push_back(Json{{"s", vs}, {"t", vt}});
        checked = 1;
      } else {
        const int arity = which == "corradi" ? 2 : 3;
        const int count = seeds.value_or(arity == 2 ? 10000 : 1000);
        for (int k = 0; k < count; ++k) {
          const auto inst = sample_family(static_cast<std::uint64_t>(k), arity);
          const auto res = check_corradi_instance(inst);
          if (!res.hypotheses_ok) continue;
          ++checked;
          if (!res.satisfied || !res.double_counting_ok) {
            violations.push_back(Json{{"seed", k}, {"union", res.union_size}, {"bound", res.bound},
                                      {"double_counting_ok", res.double_counting_ok}});
          }
        }
      }
      Json j{{"which", which}, {"checked", checked}, {"violations", violations}};
      if (which == "a1") {
        j["s_max"] = s_max;
        j["t_max"] = t_max;
      }
      store_record(common, {0, 0, 0, 0, "check-lemmas:" + which, 0}, j);
      emit(j, common, out);
      return violations.empty() ? 0 : 1;
    };
  });

  auto* report_cmd = app.add_subcommand("report", "compare stored exact values with closed forms");
  add_common(report_cmd, common);
  report_cmd->callback([&] {
    action = [&] {
      const auto path = resolve_store_path(common.store);
      if (!path) throw InputError("report needs --store or RBL_STORE");
      const StoreContents st = load_store(*path);
      Json rows = Json::array();
      for (const auto& row : build_report(st)) rows.push_back(to_json(row));
      for (const auto& w : st.warnings) err << "warning: " << w << "\n";
      emit(Json{{"rows", rows}, {"warnings", st.warnings}}, Common{common.out_path, {}, 0}, out);
      return 0;
    };
  });

  std::vector<const char*> argv{"rbl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  }
}

}  // namespace rbl::cli
