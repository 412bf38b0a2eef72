#include "toriclab/raster.hpp"

#include <cstdlib>

namespace toric {

bool cone_contains_bond_sampled(const Cone& c, const Bond& b) {
  // The feasibility interval endpoints have denominators bounded by the
  // segment slopes of the two sector functionals, which only involve the
  // direction vectors (the segment has unit extent). Any nonempty open
  // interval inside (0,1) has length at least 1/(s1*s2), so a grid finer
  // than that cannot miss it.
  const coord_t s1 = std::abs(c.d1.x) + std::abs(c.d1.y);
  const coord_t s2 = std::abs(c.d2.x) + std::abs(c.d2.y);
  const coord_t n = 4 * s1 * s2 + 5;

  const Vertex u = b.from(), v = b.to();
  for (coord_t k = 1; k < n; ++k) {
    // P(k/n) scaled by n: all tests stay in integers.
    const Vec2 p{(n - k) * u.x + k * v.x - n * c.apex.x,
                 (n - k) * u.y + k * v.y - n * c.apex.y};
    if (cross(c.d1, p) > 0 && cross(p, c.d2) > 0) return true;
  }
  return false;
}

}  // namespace toric
