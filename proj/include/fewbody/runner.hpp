#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fewbody/io.hpp"
#include "fewbody/perturbation.hpp"
#include "fewbody/spin.hpp"

namespace fewbody {

enum class RunMode { spectrum, weak, ed, unitary, near_unitary, classify };

std::string to_string(RunMode m);
RunMode run_mode_from_string(const std::string& s);

// Declarative run description, parsed from a single versioned JSON document.
// Unknown fields are rejected.
struct RunConfig {
  int version = 1;
  TrapSpec trap;
  Grid grid;
  int particles = 1;
  Statistics statistics = Statistics::distinguishable;
  int spin_components = 1;
  std::optional<InteractionSpec> interaction;
  RunMode mode = RunMode::spectrum;
  double e_max = 0.0;
  bool has_e_max = false;
  int n_states = 8;
  std::optional<IrrepLabel> sector;
  std::optional<std::vector<int>> composition;  // near_unitary source level
  std::string out_dir = ".";
  std::string format = "csv";
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);

struct RunResult {
  std::vector<std::filesystem::path> files;
  std::string summary;
};

// Orchestrates one run: solves (or loads) the one-particle problem, applies
// the requested mode, and writes CSV/JSON outputs. Deterministic: identical
// configs yield byte-identical files.
RunResult run(const RunConfig& config, const std::filesystem::path& out_dir,
              const std::string& format, const std::filesystem::path& cache_dir,
              bool use_cache);

}  // namespace fewbody
