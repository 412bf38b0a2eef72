#include "toriclab/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace toric {

namespace {

bool vertex_touches_cone(const Vertex& v, const Cone& c) {
  for (const Bond& b : star_bonds(v))
    if (cone_contains_bond(c, b)) return true;
  return false;
}

bool vertex_touches_complement(const Vertex& v, const Cone& c) {
  for (const Bond& b : star_bonds(v))
    if (!cone_contains_bond(c, b)) return true;
  return false;
}

bool plaquette_touches_cone(const Plaquette& p, const Cone& c) {
  for (const Bond& b : plaquette_bonds(p))
    if (cone_contains_bond(c, b)) return true;
  return false;
}

bool plaquette_touches_complement(const Plaquette& p, const Cone& c) {
  for (const Bond& b : plaquette_bonds(p))
    if (!cone_contains_bond(c, b)) return true;
  return false;
}

bool in_gap(const Bond& b, const Cone& inner, const Cone& outer) {
  return cone_contains_bond(outer, b) && !cone_contains_bond(inner, b);
}

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

std::uint64_t Scaffold::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix_vertex = [&h](const Vertex& v) {
    h = fnv_mix(h, static_cast<std::uint64_t>(v.x) * 0x100000001b3ULL +
                       static_cast<std::uint64_t>(v.y));
  };
  mix_vertex(inner.apex);
  mix_vertex({inner.d1.x, inner.d1.y});
  mix_vertex({inner.d2.x, inner.d2.y});
  mix_vertex(outer.apex);
  mix_vertex({outer.d1.x, outer.d1.y});
  mix_vertex({outer.d2.x, outer.d2.y});
  mix_vertex({window.xmin, window.ymin});
  mix_vertex({window.xmax, window.ymax});
  for (const ScaffoldString& s : strings) {
    h = fnv_mix(h, s.dual ? 2 : 1);
    for (const Bond& b : (s.dual ? s.dual_path.crossed_bonds() : s.path.bond_set())) {
      mix_vertex(b.base);
      h = fnv_mix(h, b.o == Orient::East ? 0 : 1);
    }
  }
  return h;
}

namespace {

// First vertex (in canonical order) of `from` whose BFS through the gap
// reaches any vertex of `to`; output is (path, start, end).
std::optional<Path> route_to_set(const std::vector<Vertex>& from,
                                 const std::set<Vertex>& to, const Region& region,
                                 const Window& w, NeighborOrder order) {
  for (const Vertex& start : from) {
    // Deterministic multi-target BFS: run single-source BFS and take the
    // first target reached; equal-distance ties resolve by expansion order.
    std::optional<Path> best;
    std::size_t best_len = 0;
    for (const Vertex& target : to) {
      auto p = path_between(start, target, region, w, order);
      if (!p) continue;
      const std::size_t len = p->edge_count();
      if (!best || len < best_len ||
          (len == best_len && p->vertices.back() < best->vertices.back())) {
        best = std::move(p);
        best_len = len;
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<DualPath> route_to_set_dual(const std::vector<Plaquette>& from,
                                          const std::set<Plaquette>& to,
                                          const Region& region, const Window& w,
                                          NeighborOrder order) {
  for (const Plaquette& start : from) {
    std::optional<DualPath> best;
    std::size_t best_len = 0;
    for (const Plaquette& target : to) {
      auto p = dual_path_between(start, target, region, w, order);
      if (!p) continue;
      const std::size_t len = p->plaquettes.size();
      if (!best || len < best_len ||
          (len == best_len && p->plaquettes.back() < best->plaquettes.back())) {
        best = std::move(p);
        best_len = len;
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace

Scaffold build_scaffold(const Cone& c1, const Cone& c2, const Window& w,
                        NeighborOrder order) {
  const DistalResult sep = is_distally_separated(c1, c2, w);
  if (!sep.separated())
    throw std::invalid_argument("build_scaffold: cones are not distally separated on the window (" +
                                sep.note + ")");

  Scaffold s;
  s.inner = c1;
  s.outer = c2;
  s.window = w;
  const Region gap = Region::gap(c1, c2);

  // Eligible connector endpoints: boundary sites that actually touch the
  // region whose excitations they will absorb.
  std::vector<Vertex> inner_v;
  for (const Vertex& v : boundary_vertices(c1, w))
    if (vertex_touches_cone(v, c1)) inner_v.push_back(v);
  std::set<Vertex> outer_v;
  for (const Vertex& v : boundary_vertices(c2, w))
    if (vertex_touches_complement(v, c2)) outer_v.insert(v);

  auto xi1b = route_to_set(inner_v, outer_v, gap, w, order);
  if (!xi1b) throw NoGapRoute("build_scaffold: no gap route between the boundaries (lattice)");

  std::vector<Plaquette> inner_p = boundary_plaquettes(c1, w);
  const auto outer_p_list = boundary_plaquettes(c2, w);
  std::set<Plaquette> outer_p(outer_p_list.begin(), outer_p_list.end());

  auto xi2b = route_to_set_dual(inner_p, outer_p, gap, w, order);
  if (!xi2b) throw NoGapRoute("build_scaffold: no gap route between the boundaries (dual)");

  s.connector_inner_end = xi1b->vertices.front();
  s.connector_outer_end = xi1b->vertices.back();
  s.dual_connector_inner_end = xi2b->plaquettes.front();
  s.dual_connector_outer_end = xi2b->plaquettes.back();

  s.strings.push_back({ScaffoldString::Role::Connector, false, *xi1b, {}, string_from_path(*xi1b)});
  s.strings.push_back({ScaffoldString::Role::Connector, true, {}, *xi2b, string_from_dual_path(*xi2b)});

  // Gap-interior sites: all four incident/enclosing bonds in the gap.
  for (const Vertex& v : w.vertices()) {
    bool all = true;
    for (const Bond& b : star_bonds(v))
      if (!in_gap(b, c1, c2)) { all = false; break; }
    if (all) s.interior_vertices.push_back(v);
  }
  for (const Plaquette& p : w.plaquettes()) {
    bool all = true;
    for (const Bond& b : plaquette_bonds(p))
      if (!in_gap(b, c1, c2)) { all = false; break; }
    if (all) s.interior_plaquettes.push_back(p);
  }
  std::sort(s.interior_vertices.begin(), s.interior_vertices.end());
  std::sort(s.interior_plaquettes.begin(), s.interior_plaquettes.end());

  if (!s.interior_vertices.empty()) {
    const Vertex anchor = s.interior_vertices.front();
    std::set<Vertex> targets(inner_v.begin(), inner_v.end());
    auto xi_v = route_to_set({anchor}, targets, gap, w, order);
    if (!xi_v) throw NoGapRoute("build_scaffold: interior vertex anchor cannot reach the inner boundary");
    s.vertex_anchor_boundary_end = xi_v->vertices.back();
    s.idx_vertex_anchor = s.strings.size();
    s.strings.push_back({ScaffoldString::Role::Anchor, false, *xi_v, {}, string_from_path(*xi_v)});
  }
  if (!s.interior_plaquettes.empty()) {
    const Plaquette anchor = s.interior_plaquettes.front();
    std::set<Plaquette> targets(inner_p.begin(), inner_p.end());
    auto xi_p = route_to_set_dual({anchor}, targets, gap, w, order);
    if (!xi_p) throw NoGapRoute("build_scaffold: interior plaquette anchor cannot reach the inner boundary");
    s.plaquette_anchor_boundary_end = xi_p->plaquettes.back();
    s.idx_plaquette_anchor = s.strings.size();
    s.strings.push_back({ScaffoldString::Role::Anchor, true, {}, *xi_p, string_from_dual_path(*xi_p)});
  }

  for (std::size_t i = 1; i < s.interior_vertices.size(); ++i) {
    auto xi = path_between(s.interior_vertices[i], s.interior_vertices.front(), gap, w, order);
    if (!xi) throw NoGapRoute("build_scaffold: interior vertex cannot reach its anchor");
    s.idx_interior_vertex.push_back(s.strings.size());
    s.strings.push_back({ScaffoldString::Role::Interior, false, *xi, {}, string_from_path(*xi)});
  }
  for (std::size_t i = 1; i < s.interior_plaquettes.size(); ++i) {
    auto xi = dual_path_between(s.interior_plaquettes[i], s.interior_plaquettes.front(), gap, w, order);
    if (!xi) throw NoGapRoute("build_scaffold: interior plaquette cannot reach its anchor");
    s.idx_interior_plaquette.push_back(s.strings.size());
    s.strings.push_back({ScaffoldString::Role::Interior, true, {}, *xi, string_from_dual_path(*xi)});
  }

  return s;
}

std::vector<PauliOp> f0_group_elements(const Scaffold& s, std::size_t cap) {
  const std::size_t k = s.strings.size();
  if (k >= 63 || (std::size_t{1} << k) > cap)
    throw std::invalid_argument("f0_group_elements: scaffold group exceeds cap");
  std::vector<PauliOp> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    PauliOp prod = PauliOp::identity();
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) prod = multiply(prod, s.strings[i].op);
    out.push_back(std::move(prod));
  }
  return out;
}

std::size_t h0_dimension(const Scaffold& s, std::size_t cap) {
  return gram(f0_group_elements(s, cap)).rank;
}

namespace {

// Pair the sorted sites consecutively and route each pair inside the
// region; returns the product of the routed strings.
PauliOp route_pairs(const std::vector<Vertex>& sites, const Region& region,
                    const Window& w, const char* what) {
  if (sites.size() % 2 != 0)
    throw NotRoutable(std::string("canonicalize: odd residual charge count in ") + what);
  PauliOp acc = PauliOp::identity();
  for (std::size_t i = 0; i + 1 < sites.size(); i += 2) {
    auto p = path_between(sites[i], sites[i + 1], region, w);
    if (!p)
      throw NotRoutable(std::string("canonicalize: cannot route charges inside ") + what);
    acc = multiply(acc, string_from_path(*p));
  }
  return acc;
}

PauliOp route_pairs_dual(const std::vector<Plaquette>& sites, const Region& region,
                         const Window& w, const char* what) {
  if (sites.size() % 2 != 0)
    throw NotRoutable(std::string("canonicalize: odd residual flux count in ") + what);
  PauliOp acc = PauliOp::identity();
  for (std::size_t i = 0; i + 1 < sites.size(); i += 2) {
    auto p = dual_path_between(sites[i], sites[i + 1], region, w);
    if (!p)
      throw NotRoutable(std::string("canonicalize: cannot route fluxes inside ") + what);
    acc = multiply(acc, string_from_dual_path(*p));
  }
  return acc;
}

}  // namespace

CanonicalForm canonicalize(const PauliOp& p, const Scaffold& s) {
  const Cone& c1 = s.inner;
  const Cone& c2 = s.outer;
  const Window& w = s.window;

  // Operators already confined to one side pass through unchanged.
  if (all_in_cone(p.x_support, c1) && all_in_cone(p.z_support, c1))
    return {Phase::one(), p, PauliOp::identity(), PauliOp::identity(), 0};
  if (none_in_cone(p.x_support, c2) && none_in_cone(p.z_support, c2))
    return {Phase::one(), PauliOp::identity(), PauliOp::identity(), p, 0};

  const Syndrome syn = syndrome(p);

  if (s.strings.size() > 64)
    throw std::invalid_argument("canonicalize: scaffold exceeds 64 strings");
  std::uint64_t mask = 0;
  const auto toggle = [&mask](std::size_t i) { mask ^= std::uint64_t{1} << i; };

  // Gap-interior charges go through their scaffold strings.
  bool anchor_charge = false;
  for (const Vertex& v : syn.charges) {
    if (vertex_touches_cone(v, c1) || vertex_touches_complement(v, c2)) continue;
    // All four bonds lie in the gap: the site must be a scaffold label.
    const auto it = std::find(s.interior_vertices.begin(), s.interior_vertices.end(), v);
    if (it == s.interior_vertices.end())
      throw NotRoutable("canonicalize: gap-interior charge outside the scaffold window");
    const std::size_t pos = static_cast<std::size_t>(it - s.interior_vertices.begin());
    if (pos == 0) {
      anchor_charge = !anchor_charge;
    } else {
      toggle(s.idx_interior_vertex[pos - 1]);
      anchor_charge = !anchor_charge;  // each interior string ends at the anchor
    }
  }
  if (anchor_charge) toggle(*s.idx_vertex_anchor);

  bool anchor_flux = false;
  for (const Plaquette& q : syn.fluxes) {
    if (plaquette_touches_cone(q, c1) || plaquette_touches_complement(q, c2)) continue;
    const auto it =
        std::find(s.interior_plaquettes.begin(), s.interior_plaquettes.end(), q);
    if (it == s.interior_plaquettes.end())
      throw NotRoutable("canonicalize: gap-interior flux outside the scaffold window");
    const std::size_t pos = static_cast<std::size_t>(it - s.interior_plaquettes.begin());
    if (pos == 0) {
      anchor_flux = !anchor_flux;
    } else {
      toggle(s.idx_interior_plaquette[pos - 1]);
      anchor_flux = !anchor_flux;
    }
  }
  if (anchor_flux) toggle(*s.idx_plaquette_anchor);

  // Crossing parity: count residual charges on the inner side; if odd, the
  // lattice connector carries one charge across. Likewise for fluxes.
  const auto build_fhat = [&]() {
    PauliOp acc = PauliOp::identity();
    for (std::size_t i = 0; i < s.strings.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) acc = multiply(acc, s.strings[i].op);
    return acc;
  };

  {
    Syndrome rem = syndrome_xor(syn, syndrome(build_fhat()));
    std::size_t inner_count = 0;
    for (const Vertex& v : rem.charges)
      if (vertex_touches_cone(v, c1)) ++inner_count;
    if (inner_count % 2 == 1) toggle(s.idx_connector);

    std::size_t inner_flux = 0;
    for (const Plaquette& q : rem.fluxes)
      if (plaquette_touches_cone(q, c1)) ++inner_flux;
    if (inner_flux % 2 == 1) toggle(s.idx_dual_connector);
  }

  const PauliOp fhat = build_fhat();
  const Syndrome rem = syndrome_xor(syn, syndrome(fhat));

  std::vector<Vertex> c1_charges, c2_charges;
  for (const Vertex& v : rem.charges) {
    if (vertex_touches_cone(v, c1)) {
      c1_charges.push_back(v);
    } else if (vertex_touches_complement(v, c2)) {
      c2_charges.push_back(v);
    } else {
      throw NotRoutable("canonicalize: residual charge stuck in the gap");
    }
  }
  std::vector<Plaquette> c1_fluxes, c2_fluxes;
  for (const Plaquette& q : rem.fluxes) {
    if (plaquette_touches_cone(q, c1)) {
      c1_fluxes.push_back(q);
    } else if (plaquette_touches_complement(q, c2)) {
      c2_fluxes.push_back(q);
    } else {
      throw NotRoutable("canonicalize: residual flux stuck in the gap");
    }
  }

  const Region r1 = Region::cone(c1);
  const Region r2 = Region::complement(c2);
  const PauliOp f1 =
      multiply(route_pairs(c1_charges, r1, w, "the inner cone"),
               route_pairs_dual(c1_fluxes, r1, w, "the inner cone"));
  const PauliOp f2 =
      multiply(route_pairs(c2_charges, r2, w, "the outer complement"),
               route_pairs_dual(c2_fluxes, r2, w, "the outer complement"));

  CanonicalForm form;
  form.f1 = f1;
  form.fhat = fhat;
  form.f2 = f2;
  form.fhat_mask = mask;

  const PauliOp q = multiply(f1, multiply(fhat, f2));
  const auto phase = states_equal(p, q);
  if (!phase)
    throw std::logic_error("canonicalize: syndrome routing failed to match the state");
  form.phase = *phase;
  return form;
}

bool canonical_uniqueness_check(const Scaffold& sa, const CanonicalForm& a,
                                const Scaffold& sb, const CanonicalForm& b) {
  const auto se = states_equal(a.product(), b.product());
  if (!se || (!(*se == Phase::one()) && !(*se == Phase::minus_one())))
    throw std::invalid_argument(
        "canonical_uniqueness_check: forms do not represent the same state up to sign");

  if (sa.fingerprint() == sb.fingerprint()) {
    // One scaffold: the components must be literally equal up to sign.
    if (a.fhat_mask != b.fhat_mask) return false;
    if (a.fhat.x_support != b.fhat.x_support) return false;
    if (a.fhat.z_support != b.fhat.z_support) return false;
    return (a.fhat.lambda - b.fhat.lambda) % 2 == 0;
  }
  // Different routes, same endpoints: compare as states.
  const auto fe = states_equal(a.fhat, b.fhat);
  return fe && (*fe == Phase::one() || *fe == Phase::minus_one());
}

namespace {

bool all_in_cone(const std::vector<Bond>& bonds, const Cone& c) {
  for (const Bond& b : bonds)
    if (!cone_contains_bond(c, b)) return false;
  return true;
}

bool none_in_cone(const std::vector<Bond>& bonds, const Cone& c) {
  for (const Bond& b : bonds)
    if (cone_contains_bond(c, b)) return false;
  return true;
}

}  // namespace

Path pull_in(const Path& xi, const Cone& c, const Window& w) {
  if (xi.empty()) return xi;
  if (all_in_cone(xi.bond_set(), c)) return xi;

  const auto bv = boundary_vertices(c, w);
  const auto on_boundary = [&bv](const Vertex& v) {
    return std::find(bv.begin(), bv.end(), v) != bv.end();
  };
  if (!on_boundary(xi.vertices.front()) || !on_boundary(xi.vertices.back()))
    throw std::invalid_argument("pull_in: path endpoint not on the cone boundary");

  auto inside = path_between(xi.vertices.front(), xi.vertices.back(), Region::cone(c), w);
  if (!inside) throw NotRoutable("pull_in: endpoints not connected inside the cone");
  return *inside;
}

DualPath pull_in(const DualPath& xi, const Cone& c, const Window& w) {
  if (xi.empty()) return xi;
  if (all_in_cone(xi.crossed_bonds(), c)) return xi;

  const auto bp = boundary_plaquettes(c, w);
  const auto on_boundary = [&bp](const Plaquette& p) {
    return std::find(bp.begin(), bp.end(), p) != bp.end();
  };
  if (!on_boundary(xi.plaquettes.front()) || !on_boundary(xi.plaquettes.back()))
    throw std::invalid_argument("pull_in: dual path endpoint not on the cone boundary");

  auto inside = dual_path_between(xi.plaquettes.front(), xi.plaquettes.back(),
                                  Region::cone(c), w);
  if (!inside) throw NotRoutable("pull_in: endpoints not connected inside the cone");
  return *inside;
}

ClassifyOutcome classify_excitation(const PauliOp& p, const Cone& c, const Window& w) {
  if (!none_in_cone(p.x_support, c) || !none_in_cone(p.z_support, c))
    throw std::invalid_argument("classify_excitation: operator not supported in the complement");

  const Syndrome syn = syndrome(p);

  // Witness branch: an excitation whose full stabilizer lives in the
  // complement. Charges are scanned before fluxes, in canonical order.
  for (const Vertex& v : syn.charges) {
    const auto star = star_bonds(v);
    const std::vector<Bond> sb(star.begin(), star.end());
    if (none_in_cone(sb, c)) {
      ClassifyOutcome out;
      out.kind = ClassifyOutcome::Kind::Witness;
      out.stabilizer = star_op(v);
      out.site = {true, v};
      assert(!commutes(out.stabilizer, p));
      return out;
    }
  }
  for (const Plaquette& q : syn.fluxes) {
    const auto plaq = plaquette_bonds(q);
    const std::vector<Bond> pb(plaq.begin(), plaq.end());
    if (none_in_cone(pb, c)) {
      ClassifyOutcome out;
      out.kind = ClassifyOutcome::Kind::Witness;
      out.stabilizer = plaquette_op(q);
      out.site = {false, q.anchor};
      assert(!commutes(out.stabilizer, p));
      return out;
    }
  }

  // Representative branch: every excitation touches the cone, so the
  // whole syndrome can be rebuilt inside it.
  const Region r = Region::cone(c);
  const PauliOp rep = multiply(route_pairs(syn.charges, r, w, "the cone"),
                               route_pairs_dual(syn.fluxes, r, w, "the cone"));
  const auto phase = states_equal(p, rep);
  if (!phase)
    throw std::logic_error("classify_excitation: representative does not match the state");

  ClassifyOutcome out;
  out.kind = ClassifyOutcome::Kind::InRepresentative;
  out.representative = rep;
  out.phase = *phase;
  return out;
}

namespace {

// One primitive resolution: express (i^want) * P Omega as a single
// self-adjoint term on the cone side or the complement side.
struct ResolvedTerm {
  bool a_side = true;
  GaussianRational coeff;  // real
  PauliOp op;              // self-adjoint
};

// A star anticommutes with P exactly at the charges of P, a plaquette
// exactly at the fluxes, so the syndrome sites are a complete candidate
// list. Membership in the cone algebra is the global bond predicate.
std::optional<PauliOp> anticommuting_stabilizer_in(const Cone& c, const PauliOp& p) {
  const Syndrome syn = syndrome(p);
  for (const Vertex& v : syn.charges) {
    const auto star = star_bonds(v);
    if (all_in_cone({star.begin(), star.end()}, c)) return star_op(v);
  }
  for (const Plaquette& q : syn.fluxes) {
    const auto plaq = plaquette_bonds(q);
    if (all_in_cone({plaq.begin(), plaq.end()}, c)) return plaquette_op(q);
  }
  return std::nullopt;
}

PauliOp mirror_into_complement(const PauliOp& p, const Cone& c, const Window& w) {
  const Syndrome syn = syndrome(p);
  const Region r = Region::complement(c);
  const PauliOp mirror = multiply(route_pairs(syn.charges, r, w, "the complement"),
                                  route_pairs_dual(syn.fluxes, r, w, "the complement"));
  const auto ph = states_equal(p, mirror);
  if (!ph) throw std::logic_error("dense_decompose: mirror does not match the state");
  return scale(*ph, mirror);  // now equals p on the ground vector
}

ResolvedTerm resolve_primitive(bool want_i, const PauliOp& p, const Cone& c,
                               const Window& w) {
  const bool sa = p.self_adjoint();
  ResolvedTerm t;
  t.coeff = GaussianRational::one();

  if (!want_i && sa) {
    t.op = p;
    return t;
  }
  if (want_i && !sa) {
    t.op = scale(Phase::i(), p);
    return t;
  }

  if (const auto s = anticommuting_stabilizer_in(c, p)) {
    if (sa) {
      // i S P is self-adjoint and (i S P) Omega = -i P Omega.
      t.op = scale(Phase::i(), multiply(*s, p));
      t.coeff = {-1, 0};
    } else {
      // P S is self-adjoint and (P S) Omega = P Omega.
      t.op = multiply(p, *s);
    }
    return t;
  }

  // Boundary-only excitations: mirror into the complement with the same
  // reality type (the closed loop / closed dual loop parity argument).
  const PauliOp mirror = mirror_into_complement(p, c, w);
  if (mirror.self_adjoint() != sa)
    throw std::logic_error("dense_decompose: mirror reality type does not transfer");
  t.a_side = false;
  if (sa) {
    // want i P Omega = i * mirror Omega.
    t.op = mirror;
  } else {
    // want P Omega = i * (-i mirror) Omega.
    t.op = scale(Phase::minus_i(), mirror);
  }
  return t;
}

}  // namespace

DenseDecomposition dense_decompose(const GaussianRational& lambda, const PauliOp& p,
                                   const Cone& c, const Window& w) {
  if (!all_in_cone(p.x_support, c) || !all_in_cone(p.z_support, c))
    throw std::invalid_argument("dense_decompose: operator not supported in the cone");

  DenseDecomposition out;
  const auto add = [&out](const ResolvedTerm& t, const Rat& weight) {
    if (weight == 0) return;
    ExcitationVector::Term term{t.coeff * GaussianRational{weight, 0}, t.op};
    (t.a_side ? out.a_side : out.b_side).terms.push_back(std::move(term));
  };
  add(resolve_primitive(false, p, c, w), lambda.re);
  add(resolve_primitive(true, p, c, w), lambda.im);
  return out;
}

bool dense_decomposition_certificate(const DenseDecomposition& d,
                                     const GaussianRational& lambda, const PauliOp& p) {
  // a Omega + i b Omega - lambda p Omega must vanish identically.
  ExcitationVector diff = d.a_side + d.b_side.scaled({0, 1}) +
                          ExcitationVector::unit(p).scaled(
                              GaussianRational{-1, 0} * lambda);
  return norm2(diff) == 0;
}

}  // namespace toric
