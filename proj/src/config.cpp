#include "toriclab/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace toric {

const std::vector<std::string>& Config::known_suites() {
  static const std::vector<std::string> names = {
      "geometry", "omega-oracle", "canonical", "classify",
      "dense-decompose", "split", "h0"};
  return names;
}

json Config::to_json() const {
  json trials_j = {{"omega_oracle", trials.omega_oracle},
                   {"canonical", trials.canonical},
                   {"isometry", trials.isometry},
                   {"conjugation", trials.conjugation},
                   {"parity", trials.parity},
                   {"span_max_factors", trials.span_max_factors},
                   {"classify_max_constituents", trials.classify_max_constituents},
                   {"decompose_max_constituents", trials.decompose_max_constituents}};
  json cones = {{"lambda1", toric::to_json(lambda1)},
                {"lambda2", toric::to_json(lambda2)},
                {"lambda", toric::to_json(lambda)}};
  return {{"window", toric::to_json(window)},
          {"cones", cones},
          {"oracle_window", toric::to_json(oracle_window)},
          {"census_window", toric::to_json(census_window)},
          {"factorization_window", toric::to_json(factorization_window)},
          {"classify_window", toric::to_json(classify_window)},
          {"sample_box", toric::to_json(sample_box)},
          {"seed", seed},
          {"trials", trials_j},
          {"suites", suites},
          {"out", out_dir}};
}

namespace {

[[noreturn]] void reject(const std::string& path, const std::string& what) {
  throw std::invalid_argument("config error at " + path + ": " + what);
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) reject(path, "expected an object");
}

}  // namespace

Config Config::from_json(const json& j) {
  Config cfg;
  expect_object(j, "/");

  static const std::vector<std::string> top_keys = {
      "window", "cones", "oracle_window", "census_window",
      "factorization_window", "classify_window", "sample_box",
      "seed", "trials", "suites", "out"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(top_keys.begin(), top_keys.end(), key) == top_keys.end())
      reject("/" + key, "unknown key");
  }

  const auto get_window = [&](const char* key, Window& into) {
    if (!j.contains(key)) return;
    try {
      into = window_from_json(j.at(key));
    } catch (const std::exception& e) {
      reject(std::string("/") + key, e.what());
    }
  };
  get_window("window", cfg.window);
  get_window("oracle_window", cfg.oracle_window);
  get_window("census_window", cfg.census_window);
  get_window("factorization_window", cfg.factorization_window);
  get_window("classify_window", cfg.classify_window);
  get_window("sample_box", cfg.sample_box);

  if (j.contains("cones")) {
    expect_object(j.at("cones"), "/cones");
    for (const auto& [key, value] : j.at("cones").items()) {
      try {
        if (key == "lambda1") {
          cfg.lambda1 = cone_from_json(value);
        } else if (key == "lambda2") {
          cfg.lambda2 = cone_from_json(value);
        } else if (key == "lambda") {
          cfg.lambda = cone_from_json(value);
        } else {
          reject("/cones/" + key, "unknown cone name (lambda1, lambda2, lambda)");
        }
      } catch (const std::invalid_argument& e) {
        reject("/cones/" + key, e.what());
      }
    }
  }

  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
      reject("/seed", "expected an integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }

  if (j.contains("trials")) {
    const json& t = j.at("trials");
    expect_object(t, "/trials");
    const auto get_count = [&](const char* key, auto& into) {
      if (!t.contains(key)) return;
      if (!t.at(key).is_number_integer() && !t.at(key).is_number_unsigned())
        reject(std::string("/trials/") + key, "expected an integer");
      const auto v = t.at(key).get<std::int64_t>();
      if (v < 0) reject(std::string("/trials/") + key, "must be nonnegative");
      into = static_cast<std::decay_t<decltype(into)>>(v);
    };
    static const std::vector<std::string> trial_keys = {
        "omega_oracle", "canonical", "isometry", "conjugation", "parity",
        "span_max_factors", "classify_max_constituents", "decompose_max_constituents"};
    for (const auto& [key, value] : t.items()) {
      (void)value;
      if (std::find(trial_keys.begin(), trial_keys.end(), key) == trial_keys.end())
        reject("/trials/" + key, "unknown key");
    }
    get_count("omega_oracle", cfg.trials.omega_oracle);
    get_count("canonical", cfg.trials.canonical);
    get_count("isometry", cfg.trials.isometry);
    get_count("conjugation", cfg.trials.conjugation);
    get_count("parity", cfg.trials.parity);
    get_count("span_max_factors", cfg.trials.span_max_factors);
    get_count("classify_max_constituents", cfg.trials.classify_max_constituents);
    get_count("decompose_max_constituents", cfg.trials.decompose_max_constituents);
  }

  if (j.contains("suites")) {
    if (!j.at("suites").is_array()) reject("/suites", "expected an array of suite names");
    cfg.suites.clear();
    for (std::size_t i = 0; i < j.at("suites").size(); ++i) {
      const json& entry = j.at("suites")[i];
      if (!entry.is_string()) reject("/suites/" + std::to_string(i), "expected a string");
      const std::string name = entry.get<std::string>();
      const auto& known = known_suites();
      if (std::find(known.begin(), known.end(), name) == known.end())
        reject("/suites/" + std::to_string(i), "unknown suite '" + name + "'");
      cfg.suites.push_back(name);
    }
  }

  if (j.contains("out")) {
    if (!j.at("out").is_string()) reject("/out", "expected a string");
    cfg.out_dir = j.at("out").get<std::string>();
  }

  return cfg;
}

Config Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j;
  try {
    j = json::parse(in);  // nlohmann reports line/byte positions
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config parse error in " + path + ": " + e.what());
  }
  return from_json(j);
}

}  // namespace toric
