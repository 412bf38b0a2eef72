#include "toriclab/json_io.hpp"

namespace toric {

json to_json(const Bond& b) {
  return json::array({b.base.x, b.base.y, b.o == Orient::East ? "E" : "N"});
}

Bond bond_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("bond must be [x, y, \"E\"|\"N\"]");
  const std::string o = j[2].get<std::string>();
  if (o != "E" && o != "N")
    throw std::invalid_argument("bond orientation must be \"E\" or \"N\"");
  return {{j[0].get<coord_t>(), j[1].get<coord_t>()},
          o == "E" ? Orient::East : Orient::North};
}

json to_json(const Vertex& v) { return json::array({v.x, v.y}); }
json to_json(const Plaquette& p) { return json::array({p.anchor.x, p.anchor.y}); }

json to_json(const Window& w) {
  return {{"xmin", w.xmin}, {"xmax", w.xmax}, {"ymin", w.ymin}, {"ymax", w.ymax}};
}

Window window_from_json(const json& j) {
  for (const char* key : {"xmin", "xmax", "ymin", "ymax"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("window missing ") + key);
  return Window::make(j["xmin"].get<coord_t>(), j["xmax"].get<coord_t>(),
                      j["ymin"].get<coord_t>(), j["ymax"].get<coord_t>());
}

json to_json(const Cone& c) {
  return {{"apex", to_json(c.apex)},
          {"d1", json::array({c.d1.x, c.d1.y})},
          {"d2", json::array({c.d2.x, c.d2.y})}};
}

Cone cone_from_json(const json& j) {
  for (const char* key : {"apex", "d1", "d2"})
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2)
      throw std::invalid_argument(std::string("cone field ") + key + " must be [x, y]");
  return Cone::make({j["apex"][0].get<coord_t>(), j["apex"][1].get<coord_t>()},
                    {j["d1"][0].get<coord_t>(), j["d1"][1].get<coord_t>()},
                    {j["d2"][0].get<coord_t>(), j["d2"][1].get<coord_t>()});
}

json to_json(const PauliOp& p) {
  json xs = json::array(), zs = json::array();
  for (const Bond& b : p.x_support) xs.push_back(to_json(b));
  for (const Bond& b : p.z_support) zs.push_back(to_json(b));
  return {{"lambda", p.lambda}, {"x_support", xs}, {"z_support", zs}};
}

PauliOp pauli_from_json(const json& j) {
  PauliOp p;
  p.lambda = static_cast<std::uint8_t>(j.at("lambda").get<int>() % 4);
  for (const auto& b : j.at("x_support")) p.x_support.push_back(bond_from_json(b));
  for (const auto& b : j.at("z_support")) p.z_support.push_back(bond_from_json(b));
  std::sort(p.x_support.begin(), p.x_support.end());
  std::sort(p.z_support.begin(), p.z_support.end());
  return p;
}

json to_json(const GaussianRational& g) {
  return {{"re", g.re.str()}, {"im", g.im.str()}};
}

json to_json(const GramSummary& g) {
  json rows = json::array();
  for (const auto& row : g.matrix) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(std::move(r));
  }
  json basis = json::array();
  for (auto i : g.basis_indices) basis.push_back(i);
  return {{"matrix", rows}, {"rank", g.rank}, {"basis_indices", basis}};
}

json to_json(const CanonicalForm& f) {
  return {{"phase_exponent", f.phase.k},
          {"f1", to_json(f.f1)},
          {"fhat", to_json(f.fhat)},
          {"f2", to_json(f.f2)},
          {"fhat_mask", f.fhat_mask}};
}

json to_json(const ClassifyOutcome& o) {
  if (o.kind == ClassifyOutcome::Kind::Witness) {
    return {{"kind", "witness"},
            {"stabilizer", to_json(o.stabilizer)},
            {"site", {{"type", o.site.is_star ? "star" : "plaquette"},
                      {"at", to_json(o.site.at)}}}};
  }
  return {{"kind", "representative"},
          {"representative", to_json(o.representative)},
          {"phase_exponent", o.phase.k}};
}

}  // namespace toric
