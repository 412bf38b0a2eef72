#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "toriclab/canonical.hpp"
#include "toriclab/render.hpp"
#include "toriclab/suites.hpp"

namespace fs = std::filesystem;
using toric::Config;
using toric::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Config load_config(const std::string& path) {
  if (path.empty()) return Config{};
  return Config::load_file(path);
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : csv) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int cmd_validate(const std::string& config_path) {
  const Config cfg = load_config(config_path);
  std::cout << cfg.to_json().dump(2) << "\n";
  return kExitPass;
}

int cmd_run(const std::string& config_path, const std::string& suite_csv,
            std::uint64_t seed, bool seed_set, long long trials,
            const std::string& out_dir) {
  Config cfg = load_config(config_path);
  if (seed_set) cfg.seed = seed;
  if (!suite_csv.empty()) {
    const auto names = split_csv(suite_csv);
    for (const auto& n : names) {
      const auto& known = Config::known_suites();
      if (std::find(known.begin(), known.end(), n) == known.end())
        throw std::invalid_argument("unknown suite '" + n + "'");
    }
    cfg.suites = names;
  }
  if (trials >= 0) {
    cfg.trials.omega_oracle = static_cast<std::size_t>(trials);
    cfg.trials.canonical = static_cast<std::size_t>(trials);
    cfg.trials.isometry = static_cast<std::size_t>(trials);
    cfg.trials.conjugation = static_cast<std::size_t>(trials);
    cfg.trials.parity = static_cast<std::size_t>(trials);
  }
  if (!out_dir.empty()) cfg.out_dir = out_dir;

  const auto results = toric::run_suites(cfg);
  for (const auto& r : results) {
    std::cout << std::left << std::setw(18) << r.name << r.status << "  ("
              << std::fixed << std::setprecision(2) << r.wall_seconds << " s)";
    if (!r.passed()) std::cout << "  " << r.first_failure;
    std::cout << "\n";
  }

  const fs::path report_path = fs::path(cfg.out_dir) / "report.json";
  write_file(report_path, toric::report_json(cfg, results).dump(2) + "\n");
  std::cout << "report: " << report_path.string() << "\n";
  return toric::overall_exit_code(results);
}

int cmd_render(const std::string& config_path, const std::string& what,
               const std::string& out_dir) {
  Config cfg = load_config(config_path);
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  const std::string svg = toric::render_svg(cfg, what);
  const fs::path path = fs::path(cfg.out_dir) / (what + ".svg");
  write_file(path, svg);
  std::cout << path.string() << "\n";
  return kExitPass;
}

int cmd_h0(const std::string& config_path) {
  const Config cfg = load_config(config_path);
  const toric::Scaffold s = toric::build_scaffold(cfg.lambda1, cfg.lambda2, cfg.window);
  const auto elements = toric::f0_group_elements(s, 4096);

  json strings = json::array();
  for (const auto& str : s.strings) {
    strings.push_back({{"dual", str.dual},
                       {"bonds", str.dual ? str.dual_path.crossed_bonds().size()
                                          : str.path.bond_set().size()}});
  }
  const json out = {{"scaffold_strings", strings},
                    {"interior_vertices", s.interior_vertices.size()},
                    {"interior_plaquettes", s.interior_plaquettes.size()},
                    {"f0_size", elements.size()},
                    {"dimension", toric::h0_dimension(s)}};
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toriclab: exact verification lab for string operators, the ground "
               "functional, canonical forms and the split unitary on the Z^2 toric code"};
  app.require_subcommand(1);

  std::string config_path, suite_csv, out_dir, what;
  std::uint64_t seed = 0;
  long long trials = -1;

  auto* validate = app.add_subcommand("validate", "parse and echo a config");
  validate->add_option("--config", config_path, "config JSON path");

  auto* run = app.add_subcommand("run", "run verification suites and write a report");
  run->add_option("--config", config_path, "config JSON path");
  run->add_option("--suite", suite_csv, "comma-separated suite subset");
  auto* seed_opt = run->add_option("--seed", seed, "override the RNG seed");
  run->add_option("--trials", trials, "override every randomized trial count");
  run->add_option("--out", out_dir, "output directory");

  auto* render = app.add_subcommand("render", "write an SVG figure");
  render->add_option("--config", config_path, "config JSON path");
  render->add_option("--what", what, "lattice | cones | scaffold | canonical-form")
      ->required();
  render->add_option("--out", out_dir, "output directory");

  auto* h0 = app.add_subcommand("h0", "print the scaffold space report");
  h0->add_option("--config", config_path, "config JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(config_path);
    if (run->parsed())
      return cmd_run(config_path, suite_csv, seed, seed_opt->count() > 0, trials, out_dir);
    if (render->parsed()) return cmd_render(config_path, what, out_dir);
    if (h0->parsed()) return cmd_h0(config_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
