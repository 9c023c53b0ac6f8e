// Command-line driver: config-driven spectra, classification, splitting and
// unitary-limit runs with content-addressed caching.

#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "fewbody/runner.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  std::string format;
  std::string cache_dir;
  bool no_cache = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "path to the JSON run config")->required();
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--format", opts.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--cache", opts.cache_dir, "cache directory");
  cmd->add_flag("--no-cache", opts.no_cache, "disable the solution/table cache");
}

int run_subcommand(const CommonOpts& opts, fewbody::RunMode mode) {
  fewbody::RunConfig config = fewbody::load_config(opts.config_path);
  if (config.mode != mode)
    throw fewbody::ConfigInvalid("config mode '" + fewbody::to_string(config.mode) +
                                 "' does not match the subcommand");
  const std::string out_dir = !opts.out_dir.empty() ? opts.out_dir : config.out_dir;
  const std::string format = !opts.format.empty() ? opts.format : config.format;
  const std::string cache_dir =
      !opts.cache_dir.empty() ? opts.cache_dir : out_dir + "/.fewbody-cache";

  const auto result = fewbody::run(config, out_dir, format, cache_dir, !opts.no_cache);
  std::printf("%s\n", result.summary.c_str());
  for (const auto& f : result.files) std::printf("wrote %s\n", f.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra and symmetries of 1-3 trapped particles in one dimension"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* desc;
    fewbody::RunMode mode;
  };
  const Sub subs[] = {
      {"solve", "one-particle solve and N-body spectrum enumeration", fewbody::RunMode::spectrum},
      {"classify", "symmetry classification of non-interacting levels", fewbody::RunMode::classify},
      {"weak", "first-order level splitting for weak interactions", fewbody::RunMode::weak},
      {"ed", "exact diagonalization in symmetry sectors", fewbody::RunMode::ed},
      {"unitary", "spectrum at the unitary limit of the contact interaction",
       fewbody::RunMode::unitary},
      {"near-unitary", "tunneling-driven splitting near the unitary limit",
       fewbody::RunMode::near_unitary},
  };

  CommonOpts opts;
  fewbody::RunMode selected{};
  for (const auto& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.desc);
    add_common(cmd, opts);
    cmd->callback([&selected, mode = sub.mode] { selected = mode; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run_subcommand(opts, selected);
  } catch (const fewbody::ConfigInvalid& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
