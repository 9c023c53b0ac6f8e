#include "fewbody/runner.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "fewbody/spectra.hpp"
#include "fewbody/unitary.hpp"

namespace fewbody {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(RunMode m) {
  switch (m) {
    case RunMode::spectrum: return "spectrum";
    case RunMode::weak: return "weak";
    case RunMode::ed: return "ed";
    case RunMode::unitary: return "unitary";
    case RunMode::near_unitary: return "near_unitary";
    case RunMode::classify: return "classify";
  }
  throw ConfigInvalid("unknown run mode");
}

RunMode run_mode_from_string(const std::string& s) {
  if (s == "spectrum") return RunMode::spectrum;
  if (s == "weak") return RunMode::weak;
  if (s == "ed") return RunMode::ed;
  if (s == "unitary") return RunMode::unitary;
  if (s == "near_unitary") return RunMode::near_unitary;
  if (s == "classify") return RunMode::classify;
  throw ConfigInvalid("unknown mode: " + s);
}

namespace {

void reject_unknown(const json& j, const std::vector<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigInvalid("unknown field '" + key + "' in " + where);
  }
}

}  // namespace

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigInvalid("config must be a JSON object");
  reject_unknown(j,
                 {"version", "trap", "grid", "particles", "statistics", "spin_components",
                  "interaction", "mode", "cutoffs", "sector", "composition", "output"},
                 "config");

  RunConfig cfg;
  if (!j.contains("version")) throw ConfigInvalid("config needs 'version'");
  cfg.version = j.at("version").get<int>();
  if (cfg.version != 1) throw ConfigInvalid("unsupported config version");

  if (!j.contains("trap")) throw ConfigInvalid("config needs 'trap'");
  cfg.trap = trap_from_json(j.at("trap"));
  if (j.contains("grid")) cfg.grid = grid_from_json(j.at("grid"));

  cfg.particles = j.value("particles", 1);
  if (cfg.particles < 1 || cfg.particles > 3)
    throw ConfigInvalid("particles must be 1, 2 or 3");

  if (j.contains("statistics"))
    cfg.statistics = statistics_from_string(j.at("statistics").get<std::string>());
  cfg.spin_components = j.value("spin_components", 1);
  if (cfg.spin_components < 1) throw ConfigInvalid("spin_components must be >= 1");

  if (j.contains("interaction")) cfg.interaction = interaction_from_json(j.at("interaction"));

  if (!j.contains("mode")) throw ConfigInvalid("config needs 'mode'");
  cfg.mode = run_mode_from_string(j.at("mode").get<std::string>());

  if (j.contains("cutoffs")) {
    const auto& c = j.at("cutoffs");
    reject_unknown(c, {"e_max", "n_states"}, "cutoffs");
    if (c.contains("e_max")) {
      cfg.e_max = c.at("e_max").get<double>();
      cfg.has_e_max = true;
    }
    if (c.contains("n_states")) cfg.n_states = c.at("n_states").get<int>();
  }
  if (cfg.n_states < 1) throw ConfigInvalid("n_states must be >= 1");

  if (j.contains("sector")) {
    const auto& s = j.at("sector");
    reject_unknown(s, {"irrep", "parity"}, "sector");
    IrrepLabel label;
    label.shape = partition_from_string(s.at("irrep").get<std::string>());
    if (s.contains("parity")) {
      const std::string p = s.at("parity").get<std::string>();
      if (p != "+" && p != "-") throw ConfigInvalid("sector parity must be '+' or '-'");
      label.parity = (p == "+") ? 1 : -1;
    }
    cfg.sector = label;
  }

  if (j.contains("composition"))
    cfg.composition = j.at("composition").get<std::vector<int>>();

  if (j.contains("output")) {
    const auto& o = j.at("output");
    reject_unknown(o, {"dir", "format"}, "output");
    cfg.out_dir = o.value("dir", cfg.out_dir);
    cfg.format = o.value("format", cfg.format);
  }
  if (cfg.format != "csv" && cfg.format != "json")
    throw ConfigInvalid("format must be 'csv' or 'json'");

  // mode-specific requirements
  const bool needs_interaction = cfg.mode == RunMode::weak || cfg.mode == RunMode::ed ||
                                 cfg.mode == RunMode::near_unitary;
  if (needs_interaction && !cfg.interaction)
    throw ConfigInvalid("mode '" + to_string(cfg.mode) + "' needs an interaction");
  if (cfg.mode != RunMode::near_unitary && !cfg.has_e_max)
    throw ConfigInvalid("mode '" + to_string(cfg.mode) + "' needs cutoffs.e_max");
  if (cfg.mode != RunMode::spectrum && cfg.particles < 2)
    throw ConfigInvalid("mode '" + to_string(cfg.mode) + "' needs 2 or 3 particles");
  if (cfg.mode == RunMode::near_unitary &&
      cfg.interaction->kind != InteractionKind::contact)
    throw ConfigInvalid("near_unitary mode needs a contact interaction");
  if (cfg.sector && cfg.mode != RunMode::ed)
    throw ConfigInvalid("sector filter applies to ed mode only");
  return cfg;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigInvalid("cannot open config file " + path.string());
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw ConfigInvalid(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

namespace {

std::string parity_field(const std::optional<int>& p) {
  if (!p) return "";
  return *p > 0 ? "+" : "-";
}

json level_to_json(const SplitLevel& lev) {
  json j;
  j["base_energy"] = lev.base_energy;
  j["shift"] = lev.shift;
  j["total_energy"] = lev.total_energy();
  j["degeneracy"] = lev.degeneracy;
  j["irrep"] = partition_to_string(lev.irrep.shape);
  j["parity"] = parity_field(lev.irrep.parity);
  j["provenance"] = to_string(lev.provenance);
  return j;
}

std::vector<std::string> split_level_row(const SplitLevel& lev) {
  return {format_double(lev.base_energy),
          format_double(lev.shift),
          format_double(lev.total_energy()),
          std::to_string(lev.degeneracy),
          partition_to_string(lev.irrep.shape),
          parity_field(lev.irrep.parity),
          to_string(lev.provenance)};
}

long population_of(const Composition& comp, Statistics stats, int j) {
  return count_symmetrized_states(comp, stats, j);
}

struct Emitter {
  fs::path out_dir;
  std::string format;
  RunResult result;

  void emit(const std::string& basename, const std::vector<std::string>& header,
            const std::vector<std::vector<std::string>>& rows, const json& as_json) {
    if (format == "csv") {
      const fs::path p = out_dir / (basename + ".csv");
      atomic_write(p, csv_document(header, rows));
      result.files.push_back(p);
    } else {
      const fs::path p = out_dir / (basename + ".json");
      atomic_write(p, as_json.dump(2) + "\n");
      result.files.push_back(p);
    }
  }
};

TrapSymmetry trap_symmetry_of(const TrapSpec& trap) {
  if (trap.is_harmonic()) return TrapSymmetry::harmonic;
  return trap.is_symmetric() ? TrapSymmetry::symmetric : TrapSymmetry::asymmetric;
}

}  // namespace

RunResult run(const RunConfig& config, const fs::path& out_dir, const std::string& format,
              const fs::path& cache_dir, bool use_cache) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir.string());
  const Cache cache(cache_dir, use_cache);

  // one-particle solve (or cache hit)
  const std::string sol_key = solution_key(config.trap, config.grid, config.n_states);
  OneBodySolution sol = [&] {
    if (auto hit = cache.load_solution(sol_key)) return std::move(*hit);
    OneBodySolution fresh = solve_one_body(config.trap, config.grid, config.n_states);
    cache.store_solution(sol_key, fresh);
    return fresh;
  }();
  const Eigen::VectorXd& sigma1 = sol.energies();
  const int n = config.particles;

  if (config.has_e_max &&
      config.e_max > (n - 1) * sigma1[0] + sigma1[sigma1.size() - 1])
    throw ConfigInvalid("e_max exceeds the solved spectrum; raise cutoffs.n_states");

  Emitter emitter{out_dir, format, {}};

  auto emit_composition_table = [&](const std::vector<Composition>& comps, bool classified,
                                    const std::string& mode_name) {
    const TrapSymmetry sym = trap_symmetry_of(config.trap);
    std::vector<std::string> header{"labels", "energy", "degeneracy"};
    if (classified) {
      header.push_back("k0_class");
      header.push_back("c0_irreps");
      header.push_back("k_irreps");
    }
    header.push_back("population");

    std::vector<std::vector<std::string>> rows;
    json jlevels = json::array();
    for (const auto& comp : comps) {
      std::vector<std::string> row{comp.csv_field(), format_double(comp.energy()),
                                   std::to_string(comp.degeneracy())};
      json jl{{"labels", comp.labels()},
              {"energy", comp.energy()},
              {"degeneracy", comp.degeneracy()}};
      if (classified) {
        const auto cls = classify_level(comp, sol.parities(), sym);
        row.push_back(cls.k0_class);
        row.push_back(cls.c0_string());
        row.push_back(cls.k_string());
        jl["k0_class"] = cls.k0_class;
        jl["c0_irreps"] = cls.c0_string();
        jl["k_irreps"] = cls.k_string();
      }
      const long pop = population_of(comp, config.statistics, config.spin_components);
      row.push_back(std::to_string(pop));
      jl["population"] = pop;
      rows.push_back(std::move(row));
      jlevels.push_back(std::move(jl));
    }

    const auto edges = partial_order_edges(comps);
    json jedges = json::array();
    std::vector<std::vector<std::string>> edge_rows;
    for (const auto& [i, j] : edges) {
      edge_rows.push_back({comps[i].csv_field(), comps[j].csv_field()});
      jedges.push_back(json::array({comps[i].labels(), comps[j].labels()}));
    }

    emitter.emit("levels", header, rows, json{{"mode", mode_name}, {"levels", jlevels}, {"edges", jedges}});
    if (format == "csv") emitter.emit("edges", {"from", "to"}, edge_rows, json());
    emitter.result.summary =
        mode_name + ": " + std::to_string(comps.size()) + " levels, " +
        std::to_string(edges.size()) + " partial-order edges";
  };

  auto emit_split_levels = [&](const std::vector<SplitLevel>& levels,
                               const std::string& mode_name) {
    std::vector<std::vector<std::string>> rows;
    json jlevels = json::array();
    for (const auto& lev : levels) {
      rows.push_back(split_level_row(lev));
      jlevels.push_back(level_to_json(lev));
    }
    emitter.emit("split_levels",
                 {"base_energy", "shift", "total_energy", "degeneracy", "irrep", "parity",
                  "provenance"},
                 rows, json{{"mode", mode_name}, {"levels", jlevels}});
    emitter.result.summary = mode_name + ": " + std::to_string(levels.size()) + " levels";
  };

  auto build_table = [&](const std::set<int>& states) -> TwoBodyTable {
    json key_doc{{"solution", sol_key},
                 {"interaction", interaction_to_json(*config.interaction)},
                 {"states", std::vector<int>(states.begin(), states.end())}};
    const std::string key = hash_hex(fnv1a64(key_doc.dump()));
    if (auto hit = cache.load_table(key)) return std::move(*hit);
    TwoBodyTable table = config.interaction->kind == InteractionKind::contact
                             ? contact_elements(sol, states, config.interaction->g)
                             : general_elements(sol, *config.interaction, states);
    cache.store_table(key, table);
    return table;
  };

  switch (config.mode) {
    case RunMode::spectrum: {
      const auto comps = enumerate_compositions(sigma1, n, config.e_max);
      emit_composition_table(comps, false, "spectrum");
      break;
    }
    case RunMode::classify: {
      const auto comps = enumerate_compositions(sigma1, n, config.e_max);
      emit_composition_table(comps, true, "classify");
      break;
    }
    case RunMode::unitary: {
      const auto comps = unitary_spectrum(sigma1, n, config.e_max);
      emit_composition_table(comps, false, "unitary");
      break;
    }
    case RunMode::weak: {
      const auto comps = enumerate_compositions(sigma1, n, config.e_max);
      std::set<int> used;
      for (const auto& c : comps)
        for (int l : c.labels()) used.insert(l);
      const TwoBodyTable table = build_table(used);
      auto levels = weak_split(comps, table, sol.parities());
      for (auto& lev : levels) lev.provenance = Provenance::weak;
      emit_split_levels(levels, "weak");
      break;
    }
    case RunMode::ed: {
      EDConfig ed;
      ed.e_max = config.e_max;
      ed.interaction = *config.interaction;
      ed.sector = config.sector;
      const auto levels = exact_diagonalize(sol, n, ed);
      emit_split_levels(levels, "ed");
      break;
    }
    case RunMode::near_unitary: {
      std::vector<int> labels;
      if (config.composition) {
        labels = *config.composition;
      } else {
        for (int i = 0; i < n; ++i) labels.push_back(i);
      }
      const Composition comp(labels, sigma1);
      const auto params = tunneling_params(sol, comp, config.interaction->g);
      std::optional<int> parity_product;
      if (sol.has_parities()) {
        int p = 1;
        for (int l : comp.labels()) p *= sol.parities()[l];
        parity_product = p;
      }
      const bool symmetric = config.trap.is_symmetric();
      const auto levels = near_unitary_split(params, symmetric, parity_product);

      std::vector<std::vector<std::string>> rows;
      json jlevels = json::array();
      for (const auto& lev : levels) {
        rows.push_back({partition_to_string(lev.irrep.shape), parity_field(lev.irrep.parity),
                        std::to_string(lev.degeneracy), format_double(lev.shift * params.g)});
        json jl = level_to_json(lev);
        jl["shift_x_g"] = lev.shift * params.g;
        jlevels.push_back(std::move(jl));
      }
      emitter.emit("near_unitary", {"irrep", "parity", "degeneracy", "shift_x_g"}, rows,
                   json{{"mode", "near_unitary"},
                        {"composition", comp.labels()},
                        {"g", params.g},
                        {"g_t", params.gt},
                        {"g_u", params.gu},
                        {"levels", jlevels}});
      emitter.result.summary = "near_unitary: g*t = " + format_double(params.gt) +
                               ", g*u = " + format_double(params.gu);
      break;
    }
  }

  return emitter.result;
}

}  // namespace fewbody
