#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer geometry of the Z^2 lattice: bonds, stars, plaquettes,
// cones bounded by primitive-integer rays, windows, and paths.
//
// All predicates are decided with integer cross products; there is no
// floating point anywhere in this module. The global ordering convention
// is lexicographic on (y, x) for vertices and (y, x, orientation) for
// bonds, with East < North. BFS routing and every "pick the smallest"
// rule in the library refer to this order.

namespace toric {

using coord_t = std::int64_t;

struct Vec2 {
  coord_t x = 0;
  coord_t y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline coord_t cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline coord_t dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct Vertex {
  coord_t x = 0;
  coord_t y = 0;

  Vec2 to(const Vertex& o) const { return {o.x - x, o.y - y}; }
  Vertex shifted(Vec2 d) const { return {x + d.x, y + d.y}; }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

enum class Orient : std::uint8_t { East = 0, North = 1 };

// A bond is the edge from `base` to `base + (1,0)` (East) or
// `base + (0,1)` (North). The encoding is unique.
struct Bond {
  Vertex base;
  Orient o = Orient::East;

  Vertex from() const { return base; }
  Vertex to() const {
    return o == Orient::East ? Vertex{base.x + 1, base.y}
                             : Vertex{base.x, base.y + 1};
  }

  friend bool operator==(const Bond&, const Bond&) = default;
  friend auto operator<=>(const Bond& a, const Bond& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return static_cast<int>(a.o) <=> static_cast<int>(b.o);
  }
};

inline Bond east_bond(coord_t x, coord_t y) { return {{x, y}, Orient::East}; }
inline Bond north_bond(coord_t x, coord_t y) { return {{x, y}, Orient::North}; }

// Unit square whose lower-left corner is `anchor`.
struct Plaquette {
  Vertex anchor;
  friend bool operator==(const Plaquette&, const Plaquette&) = default;
  friend auto operator<=>(const Plaquette& a, const Plaquette& b) {
    return a.anchor <=> b.anchor;
  }
};

// The four bonds incident to v, in canonical bond order.
std::array<Bond, 4> star_bonds(const Vertex& v);

// The four bonds enclosing p, in canonical bond order.
std::array<Bond, 4> plaquette_bonds(const Plaquette& p);

// Ordered lattice path. Consecutive vertices must be at distance 1.
// A path with fewer than two vertices is empty (no bonds); a path is
// closed iff it has >= 2 vertices and front() == back().
struct Path {
  std::vector<Vertex> vertices;

  bool empty() const { return vertices.size() < 2; }
  bool closed() const { return vertices.size() >= 2 && vertices.front() == vertices.back(); }
  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  // Traversed bonds with parity accumulation: a bond walked twice cancels.
  // Result is sorted and duplicate-free.
  std::vector<Bond> bond_set() const;

  void validate() const;  // throws std::invalid_argument on a broken step
};

// Ordered path on the dual lattice; consecutive plaquettes are adjacent
// across exactly one bond. Identified with the set of crossed bonds.
struct DualPath {
  std::vector<Plaquette> plaquettes;

  bool empty() const { return plaquettes.size() < 2; }
  bool closed() const {
    return plaquettes.size() >= 2 && plaquettes.front() == plaquettes.back();
  }
  std::vector<Bond> crossed_bonds() const;  // parity-accumulated, sorted

  void validate() const;
};

// Cone: all bonds whose open segment meets the open sector
//   { apex + a*d1 + b*d2 : a, b > 0 },
// where d1, d2 are primitive integer vectors with cross(d1, d2) > 0
// (d1 -> d2 counterclockwise, angle strictly between 0 and pi).
struct Cone {
  Vertex apex;
  Vec2 d1;
  Vec2 d2;

  static Cone make(Vertex apex, Vec2 d1, Vec2 d2);  // validates invariants

  // Sector side values: the open sector is {edge1 > 0 and edge2 > 0},
  // ray k is {edge_k == 0, params >= 0}.
  coord_t edge1(const Vertex& p) const { return cross(d1, {p.x - apex.x, p.y - apex.y}); }
  coord_t edge2(const Vertex& p) const { return cross({p.x - apex.x, p.y - apex.y}, d2); }

  bool sector_contains(const Vertex& p) const { return edge1(p) > 0 && edge2(p) > 0; }
  bool closed_sector_contains(const Vertex& p) const { return edge1(p) >= 0 && edge2(p) >= 0; }
  bool on_ray(const Vertex& p) const;

  friend bool operator==(const Cone&, const Cone&) = default;
};

// Exact open-segment / open-sector intersection test.
bool cone_contains_bond(const Cone& c, const Bond& b);

// Vertex rectangle [xmin, xmax] x [ymin, ymax]; the derived bond set is
// every bond with both endpoints inside the rectangle.
struct Window {
  coord_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;

  static Window make(coord_t xmin, coord_t xmax, coord_t ymin, coord_t ymax);

  bool contains_vertex(const Vertex& v) const {
    return v.x >= xmin && v.x <= xmax && v.y >= ymin && v.y <= ymax;
  }
  bool contains_bond(const Bond& b) const {
    return contains_vertex(b.from()) && contains_vertex(b.to());
  }
  bool contains_plaquette(const Plaquette& p) const {
    return p.anchor.x >= xmin && p.anchor.x < xmax && p.anchor.y >= ymin &&
           p.anchor.y < ymax;
  }
  // Star of v lies fully inside the window.
  bool contains_star(const Vertex& v) const {
    return v.x > xmin && v.x < xmax && v.y > ymin && v.y < ymax;
  }

  std::vector<Bond> bonds() const;          // canonical order
  std::vector<Vertex> vertices() const;     // canonical order
  std::vector<Plaquette> plaquettes() const;

  friend bool operator==(const Window&, const Window&) = default;
};

// Bond-set region: a cone, its complement, the gap between two cones
// (bonds of c2 not in c1), an explicit finite set, or everything.
class Region {
 public:
  enum class Kind { All, Cone, Complement, Gap, FiniteSet };

  static Region all();
  static Region cone(const Cone& c);
  static Region complement(const Cone& c);
  static Region gap(const Cone& inner, const Cone& outer);
  static Region finite_set(std::vector<Bond> bonds);

  Kind kind() const { return kind_; }
  bool contains(const Bond& b) const;
  const std::vector<Bond>& bonds() const { return set_; }  // FiniteSet only

 private:
  Kind kind_ = Kind::All;
  std::optional<Cone> a_;
  std::optional<Cone> b_;
  std::vector<Bond> set_;
};

// Boundary of a cone per the two-clause definition: v lies on a ray, or
// v lies outside the closed sector and is an endpoint of a cone bond.
std::vector<Vertex> boundary_vertices(const Cone& c, const Window& w);

// Plaquettes with some, but not all, enclosing bonds in the cone.
std::vector<Plaquette> boundary_plaquettes(const Cone& c, const Window& w);

// Stars (plaquettes) all four of whose bonds lie in r and in the window.
std::vector<Vertex> stars_in_region(const Region& r, const Window& w);
std::vector<Plaquette> plaquettes_in_region(const Region& r, const Window& w);

// Bonds whose syndrome neighbourhoods lie fully inside the window: both
// endpoint stars interior (eligible Z supports), respectively both
// adjacent plaquettes interior (eligible X supports). On such supports
// the finite-window ground state reproduces the infinite-volume
// functional exactly.
std::vector<Bond> interior_z_bonds(const Window& w);
std::vector<Bond> interior_x_bonds(const Window& w);

// A star or plaquette, referenced by its vertex / anchor.
struct SiteRef {
  bool is_star = true;
  Vertex at;
  friend bool operator==(const SiteRef&, const SiteRef&) = default;
};

struct DistalResult {
  enum class Verdict { Separated, NotSeparated, Undetermined };
  Verdict verdict = Verdict::Undetermined;
  std::optional<SiteRef> witness;  // set iff NotSeparated
  std::string note;

  bool separated() const { return verdict == Verdict::Separated; }
};

// Decides the distal-separation relation between nested cones:
// every star or plaquette whose four bonds all lie in c1 or outside c2
// must lie entirely on one side. The window is scanned exhaustively;
// outside the window the verdict Separated is only returned when a
// sufficient tail analysis covers all remaining candidates (parallel
// boundary corridors are checked by exact periodicity, all other
// close-approach zones are bounded and must fit in the window).
// Throws std::invalid_argument if c1 is not contained in c2 on w.
DistalResult is_distally_separated(const Cone& c1, const Cone& c2, const Window& w);

// Deterministic BFS routing through the bonds of r inside w.
// Neighbor expansion follows the canonical bond order (or its reverse,
// which yields an equally valid but generally different route). Returns
// std::nullopt when the endpoints are not connected.
enum class NeighborOrder { Canonical, Reversed };

std::optional<Path> path_between(const Vertex& v1, const Vertex& v2,
                                 const Region& r, const Window& w,
                                 NeighborOrder order = NeighborOrder::Canonical);
std::optional<DualPath> dual_path_between(const Plaquette& p1, const Plaquette& p2,
                                          const Region& r, const Window& w,
                                          NeighborOrder order = NeighborOrder::Canonical);

}  // namespace toric
