#pragma once

#include <json.hpp>

#include "toriclab/canonical.hpp"
#include "toriclab/pauli.hpp"
#include "toriclab/vacuum.hpp"

// JSON encodings shared by the config files, fixtures, and reports.
// Bonds are encoded as [x, y, "E"|"N"], exact rationals as strings.

namespace toric {

using json = nlohmann::ordered_json;

json to_json(const Bond& b);
Bond bond_from_json(const json& j);

json to_json(const Vertex& v);
json to_json(const Plaquette& p);

json to_json(const Window& w);
Window window_from_json(const json& j);

json to_json(const Cone& c);
Cone cone_from_json(const json& j);

// {lambda, x_support: [bond], z_support: [bond]}
json to_json(const PauliOp& p);
PauliOp pauli_from_json(const json& j);

json to_json(const GaussianRational& g);  // {"re": "p/q", "im": "p/q"}

json to_json(const GramSummary& g);

json to_json(const CanonicalForm& f);
json to_json(const ClassifyOutcome& o);

}  // namespace toric
