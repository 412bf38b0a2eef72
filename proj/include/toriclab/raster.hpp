#pragma once

#include "toriclab/lattice.hpp"

// Slow reference evaluator for the cone membership predicate: samples the
// open segment at every rational point k/N for a denominator fine enough
// to hit any nonempty open feasibility interval, testing the strict
// sector inequalities in integers. Used to cross-check the exact
// interval-clipping test; never used by the predicate itself.

namespace toric {

bool cone_contains_bond_sampled(const Cone& c, const Bond& b);

}  // namespace toric
