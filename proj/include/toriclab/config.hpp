#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toriclab/json_io.hpp"

// Run configuration: geometry, windows, seed, trial counts, suite
// selection. Every field has a default; a config file overrides fields
// and unknown keys are rejected with their JSON pointer path.

namespace toric {

struct TrialCounts {
  std::size_t omega_oracle = 1000;
  std::size_t canonical = 500;
  std::size_t isometry = 500;
  std::size_t conjugation = 200;
  std::size_t parity = 200;
  int span_max_factors = 2;
  int classify_max_constituents = 4;
  int decompose_max_constituents = 2;
};

struct Config {
  // The nested cone pair: lambda1 inside lambda2, the worked example with
  // parallel diagonal edges and apexes one apart.
  Cone lambda1 = Cone::make({1, 0}, {1, -1}, {1, 1});
  Cone lambda2 = Cone::make({0, 0}, {1, -1}, {1, 1});
  // Single cone for the commutant-dichotomy and decomposition suites.
  Cone lambda = Cone::make({0, 0}, {1, 0}, {0, 1});

  Window window = Window::make(-12, 14, -12, 12);         // symbolic work area
  Window oracle_window = Window::make(0, 3, 0, 2);        // 17 bonds
  Window census_window = Window::make(0, 2, 0, 2);        // 12 bonds
  Window factorization_window = Window::make(-4, 5, -4, 5);
  Window classify_window = Window::make(-3, 3, -3, 3);
  Window sample_box = Window::make(-2, 8, -6, 6);         // random-string area

  std::uint64_t seed = 20240817;
  TrialCounts trials;
  std::vector<std::string> suites = {"geometry",  "omega-oracle", "canonical",
                                     "classify",  "dense-decompose", "split",
                                     "h0"};
  std::string out_dir = "out";

  static const std::vector<std::string>& known_suites();

  json to_json() const;
  static Config from_json(const json& j);       // throws with field paths
  static Config load_file(const std::string& path);  // parse + validate
};

}  // namespace toric
