#pragma once

#include "toriclab/pauli.hpp"
#include "toriclab/rng.hpp"

// Seeded generators for the randomized suites: lattice / dual random
// walks inside a box and products of their string operators.

namespace toric {

// Random walk of `len` steps staying inside the box, no immediate
// backtracking when another move is available.
Path random_walk_path(Rng& rng, const Window& box, int len);
DualPath random_walk_dual(Rng& rng, const Window& box, int len);

// Product of up to max_strings random strings (lattice or dual, fair
// coin) with lengths in [1, max_len].
PauliOp random_string_product(Rng& rng, const Window& box, int max_strings, int max_len);

// Same, but every traversed (crossed) bond stays in the region. Walks
// start at a region-incident site and step only along region bonds.
// Throws std::invalid_argument when the region is empty inside the box.
PauliOp random_region_string_product(Rng& rng, const Region& r, const Window& box,
                                     int max_strings, int max_len);

// Closed rectangle loop with corners (x1,y1), (x2,y2); dual version on
// plaquette anchors.
Path rectangle_loop(coord_t x1, coord_t x2, coord_t y1, coord_t y2);
DualPath rectangle_dual_loop(coord_t x1, coord_t x2, coord_t y1, coord_t y2);

// Random closed rectangle loop / dual loop inside the box.
Path random_rectangle_loop(Rng& rng, const Window& box);
DualPath random_rectangle_dual_loop(Rng& rng, const Window& box);

}  // namespace toric
