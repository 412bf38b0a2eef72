#include "toriclab/sampling.hpp"

#include <algorithm>

namespace toric {

namespace {

Vertex random_vertex(Rng& rng, const Window& box) {
  const coord_t x = box.xmin + static_cast<coord_t>(rng.below(box.xmax - box.xmin + 1));
  const coord_t y = box.ymin + static_cast<coord_t>(rng.below(box.ymax - box.ymin + 1));
  return {x, y};
}

Plaquette random_plaquette(Rng& rng, const Window& box) {
  const coord_t x = box.xmin + static_cast<coord_t>(rng.below(box.xmax - box.xmin));
  const coord_t y = box.ymin + static_cast<coord_t>(rng.below(box.ymax - box.ymin));
  return {{x, y}};
}

constexpr Vec2 kMoves[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

}  // namespace

Path random_walk_path(Rng& rng, const Window& box, int len) {
  Path path;
  Vertex at = random_vertex(rng, box);
  path.vertices.push_back(at);
  Vertex prev = at;
  for (int i = 0; i < len; ++i) {
    Vertex options[4];
    int count = 0;
    for (const Vec2& m : kMoves) {
      const Vertex next = at.shifted(m);
      if (!box.contains_vertex(next)) continue;
      if (next == prev && i > 0) continue;
      options[count++] = next;
    }
    if (count == 0) break;
    const Vertex next = options[rng.below(static_cast<std::uint64_t>(count))];
    prev = at;
    at = next;
    path.vertices.push_back(at);
  }
  return path;
}

DualPath random_walk_dual(Rng& rng, const Window& box, int len) {
  DualPath path;
  Plaquette at = random_plaquette(rng, box);
  path.plaquettes.push_back(at);
  Plaquette prev = at;
  for (int i = 0; i < len; ++i) {
    Plaquette options[4];
    int count = 0;
    for (const Vec2& m : kMoves) {
      const Plaquette next{{at.anchor.x + m.x, at.anchor.y + m.y}};
      if (!box.contains_plaquette(next)) continue;
      if (next == prev && i > 0) continue;
      options[count++] = next;
    }
    if (count == 0) break;
    const Plaquette next = options[rng.below(static_cast<std::uint64_t>(count))];
    prev = at;
    at = next;
    path.plaquettes.push_back(at);
  }
  return path;
}

PauliOp random_string_product(Rng& rng, const Window& box, int max_strings, int max_len) {
  PauliOp acc = PauliOp::identity();
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_strings)));
  for (int i = 0; i < n; ++i) {
    const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    if (rng.coin()) {
      acc = multiply(acc, string_from_path(random_walk_path(rng, box, len)));
    } else {
      acc = multiply(acc, string_from_dual_path(random_walk_dual(rng, box, len)));
    }
  }
  return acc;
}

namespace {

Path random_region_walk(Rng& rng, const Region& r, const Window& box, int len) {
  Vertex at{0, 0};
  bool found = false;
  for (int attempt = 0; attempt < 512 && !found; ++attempt) {
    const Vertex v = random_vertex(rng, box);
    for (const Bond& b : star_bonds(v)) {
      if (box.contains_bond(b) && r.contains(b)) {
        at = v;
        found = true;
        break;
      }
    }
  }
  if (!found)
    throw std::invalid_argument("random_region_string_product: region empty in the box");

  Path path;
  path.vertices.push_back(at);
  Vertex prev = at;
  for (int i = 0; i < len; ++i) {
    Vertex options[4];
    int count = 0;
    for (const Bond& b : star_bonds(at)) {
      if (!box.contains_bond(b) || !r.contains(b)) continue;
      const Vertex next = (b.from() == at) ? b.to() : b.from();
      if (next == prev && i > 0) continue;
      options[count++] = next;
    }
    if (count == 0) break;
    const Vertex next = options[rng.below(static_cast<std::uint64_t>(count))];
    prev = at;
    at = next;
    path.vertices.push_back(at);
  }
  return path;
}

DualPath random_region_walk_dual(Rng& rng, const Region& r, const Window& box, int len) {
  const auto crossing = [](const Plaquette& a, const Plaquette& b) -> Bond {
    const coord_t dx = b.anchor.x - a.anchor.x, dy = b.anchor.y - a.anchor.y;
    if (dx == 1) return north_bond(b.anchor.x, b.anchor.y);
    if (dx == -1) return north_bond(a.anchor.x, a.anchor.y);
    if (dy == 1) return east_bond(a.anchor.x, b.anchor.y);
    return east_bond(a.anchor.x, a.anchor.y);
  };

  Plaquette at{{0, 0}};
  bool found = false;
  for (int attempt = 0; attempt < 512 && !found; ++attempt) {
    const Plaquette p = random_plaquette(rng, box);
    for (const Vec2& m : kMoves) {
      const Plaquette q{{p.anchor.x + m.x, p.anchor.y + m.y}};
      if (!box.contains_plaquette(q)) continue;
      const Bond b = crossing(p, q);
      if (box.contains_bond(b) && r.contains(b)) {
        at = p;
        found = true;
        break;
      }
    }
  }
  if (!found)
    throw std::invalid_argument("random_region_string_product: region empty in the box (dual)");

  DualPath path;
  path.plaquettes.push_back(at);
  Plaquette prev = at;
  for (int i = 0; i < len; ++i) {
    Plaquette options[4];
    int count = 0;
    for (const Vec2& m : kMoves) {
      const Plaquette next{{at.anchor.x + m.x, at.anchor.y + m.y}};
      if (!box.contains_plaquette(next)) continue;
      const Bond b = crossing(at, next);
      if (!box.contains_bond(b) || !r.contains(b)) continue;
      if (next == prev && i > 0) continue;
      options[count++] = next;
    }
    if (count == 0) break;
    const Plaquette next = options[rng.below(static_cast<std::uint64_t>(count))];
    prev = at;
    at = next;
    path.plaquettes.push_back(at);
  }
  return path;
}

}  // namespace

PauliOp random_region_string_product(Rng& rng, const Region& r, const Window& box,
                                     int max_strings, int max_len) {
  PauliOp acc = PauliOp::identity();
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_strings)));
  for (int i = 0; i < n; ++i) {
    const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    if (rng.coin()) {
      acc = multiply(acc, string_from_path(random_region_walk(rng, r, box, len)));
    } else {
      acc = multiply(acc, string_from_dual_path(random_region_walk_dual(rng, r, box, len)));
    }
  }
  return acc;
}

namespace {

// Random nondegenerate rectangle [x1,x2] x [y1,y2] in the box.
std::array<coord_t, 4> random_rect(Rng& rng, coord_t lo_x, coord_t hi_x, coord_t lo_y,
                                   coord_t hi_y) {
  coord_t x1 = lo_x + static_cast<coord_t>(rng.below(hi_x - lo_x + 1));
  coord_t x2 = lo_x + static_cast<coord_t>(rng.below(hi_x - lo_x + 1));
  while (x2 == x1) x2 = lo_x + static_cast<coord_t>(rng.below(hi_x - lo_x + 1));
  coord_t y1 = lo_y + static_cast<coord_t>(rng.below(hi_y - lo_y + 1));
  coord_t y2 = lo_y + static_cast<coord_t>(rng.below(hi_y - lo_y + 1));
  while (y2 == y1) y2 = lo_y + static_cast<coord_t>(rng.below(hi_y - lo_y + 1));
  return {std::min(x1, x2), std::max(x1, x2), std::min(y1, y2), std::max(y1, y2)};
}

}  // namespace

Path rectangle_loop(coord_t x1, coord_t x2, coord_t y1, coord_t y2) {
  Path loop;
  for (coord_t x = x1; x <= x2; ++x) loop.vertices.push_back({x, y1});
  for (coord_t y = y1 + 1; y <= y2; ++y) loop.vertices.push_back({x2, y});
  for (coord_t x = x2 - 1; x >= x1; --x) loop.vertices.push_back({x, y2});
  for (coord_t y = y2 - 1; y >= y1; --y) loop.vertices.push_back({x1, y});
  return loop;
}

DualPath rectangle_dual_loop(coord_t x1, coord_t x2, coord_t y1, coord_t y2) {
  DualPath loop;
  for (coord_t x = x1; x <= x2; ++x) loop.plaquettes.push_back({{x, y1}});
  for (coord_t y = y1 + 1; y <= y2; ++y) loop.plaquettes.push_back({{x2, y}});
  for (coord_t x = x2 - 1; x >= x1; --x) loop.plaquettes.push_back({{x, y2}});
  for (coord_t y = y2 - 1; y >= y1; --y) loop.plaquettes.push_back({{x1, y}});
  return loop;
}

Path random_rectangle_loop(Rng& rng, const Window& box) {
  const auto [x1, x2, y1, y2] = random_rect(rng, box.xmin, box.xmax, box.ymin, box.ymax);
  return rectangle_loop(x1, x2, y1, y2);
}

DualPath random_rectangle_dual_loop(Rng& rng, const Window& box) {
  const auto [x1, x2, y1, y2] =
      random_rect(rng, box.xmin, box.xmax - 1, box.ymin, box.ymax - 1);
  return rectangle_dual_loop(x1, x2, y1, y2);
}

}  // namespace toric
