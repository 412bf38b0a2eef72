#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "toriclab/pauli.hpp"
#include "toriclab/vacuum.hpp"

// Scaffold construction in the gap between two distally separated cones,
// the canonical decomposition phase * F1 * Fhat * F2 of any windowed
// operator relative to it, the pull-in rewriting and excitation
// classification used for the commutant dichotomy, and the self-adjoint
// dense decomposition A*Omega + i*B*Omega.

namespace toric {

struct NoGapRoute : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotRoutable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One connector of the scaffold: either a lattice path (Z string) or a
// dual path (X string), with its operator and syndrome endpoints.
struct ScaffoldString {
  enum class Role {
    Connector,        // boundary-to-boundary bridge between the two cones
    Anchor,           // interior anchor to the inner boundary
    Interior,         // interior site to its anchor
  };
  Role role = Role::Connector;
  bool dual = false;  // false: lattice path / Z; true: dual path / X
  Path path;          // set when !dual
  DualPath dual_path; // set when dual
  PauliOp op;
};

struct Scaffold {
  Cone inner;   // Lambda1
  Cone outer;   // Lambda2
  Window window;

  // Canonical string order: lattice connector, dual connector, vertex
  // anchor (if any), plaquette anchor (if any), interior vertex strings,
  // interior plaquette strings.
  std::vector<ScaffoldString> strings;

  std::vector<Vertex> interior_vertices;       // gap sites, sorted; [0] is the anchor
  std::vector<Plaquette> interior_plaquettes;  // likewise

  // Index into `strings`, by meaning.
  std::size_t idx_connector = 0;       // lattice connector
  std::size_t idx_dual_connector = 1;  // dual connector
  std::optional<std::size_t> idx_vertex_anchor;
  std::optional<std::size_t> idx_plaquette_anchor;
  std::vector<std::size_t> idx_interior_vertex;     // aligned with interior_vertices[1..]
  std::vector<std::size_t> idx_interior_plaquette;  // aligned with interior_plaquettes[1..]

  // Syndrome endpoints used by the canonicalizer.
  Vertex connector_inner_end;      // on the inner boundary
  Vertex connector_outer_end;      // on the outer boundary
  Plaquette dual_connector_inner_end;
  Plaquette dual_connector_outer_end;
  std::optional<Vertex> vertex_anchor_boundary_end;
  std::optional<Plaquette> plaquette_anchor_boundary_end;

  std::uint64_t fingerprint() const;  // content hash for label compatibility
};

// Deterministic scaffold for a separated cone pair: connector endpoints
// are the smallest eligible boundary sites, all routes are BFS through
// the gap bonds. The route order selects between the two BFS neighbor
// expansions (endpoint choices are identical), which is the knob used by
// the uniqueness experiments. Throws NoGapRoute when the window
// disconnects a required pair, std::invalid_argument when the cones are
// not distally separated on the window.
Scaffold build_scaffold(const Cone& c1, const Cone& c2, const Window& w,
                        NeighborOrder order = NeighborOrder::Canonical);

// All subset products of the scaffold strings in canonical order; index
// in the result equals the subset mask. Throws std::invalid_argument if
// 2^#strings exceeds cap.
std::vector<PauliOp> f0_group_elements(const Scaffold& s, std::size_t cap);

// Rank of the Gram matrix of the subset products.
std::size_t h0_dimension(const Scaffold& s, std::size_t cap = 4096);

struct CanonicalForm {
  Phase phase;           // input Omega = phase * f1 fhat f2 Omega
  PauliOp f1;            // supports in the inner cone
  PauliOp fhat;          // subset product of scaffold strings
  PauliOp f2;            // supports in the outer complement
  std::uint64_t fhat_mask = 0;

  PauliOp product() const { return scale(phase, multiply(f1, multiply(fhat, f2))); }
};

// Decomposes any operator supported in the window. The syndrome is routed
// region by region: sites reachable from the inner cone or the outer
// complement are absorbed there, gap-interior sites go through their
// scaffold strings, and the two connectors fix the crossing parities.
// The result satisfies states_equal(p, form.product()) == +1 exactly.
CanonicalForm canonicalize(const PauliOp& p, const Scaffold& s);

// Checks that two forms representing the same state (up to sign) have
// scaffold components agreeing up to sign. For forms over one scaffold
// this is an exact operator comparison; across scaffolds with identical
// endpoint choices it is a state comparison. Throws std::invalid_argument
// when the full products do not represent the same state up to sign.
bool canonical_uniqueness_check(const Scaffold& sa, const CanonicalForm& a,
                                const Scaffold& sb, const CanonicalForm& b);

// Rewrites a path in the cone complement with both endpoints on the cone
// boundary as a path inside the cone with the same endpoints (the two
// string operators act identically on the ground vector). A path already
// inside the cone is returned unchanged. Throws std::invalid_argument on
// an endpoint off the boundary, NotRoutable if the window disconnects.
Path pull_in(const Path& xi, const Cone& c, const Window& w);
DualPath pull_in(const DualPath& xi, const Cone& c, const Window& w);

struct ClassifyOutcome {
  enum class Kind { Witness, InRepresentative };
  Kind kind = Kind::Witness;

  // Witness: a star or plaquette operator fully supported in the cone
  // complement that anticommutes with the input.
  PauliOp stabilizer;
  SiteRef site;

  // InRepresentative: a cone-supported operator with
  // states_equal(input, representative) == Some(phase).
  PauliOp representative;
  Phase phase;
};

// The commutant dichotomy for an operator supported in the cone
// complement: either some excitation is deep in the complement (witness
// branch) or every excitation sits on the boundary and the whole state
// is reproducible inside the cone (representative branch).
ClassifyOutcome classify_excitation(const PauliOp& p, const Cone& c, const Window& w);

struct DenseDecomposition {
  ExcitationVector a_side;  // real combinations of self-adjoint cone-supported ops
  ExcitationVector b_side;  // likewise, complement-supported
};

// Writes lambda * P Omega as A Omega + i B Omega with A and B self-adjoint
// and supported in the cone / its complement respectively. Follows the
// three-way case split: direct reality, reality flipped by an
// anticommuting in-cone stabilizer, or the mirrored complement string.
DenseDecomposition dense_decompose(const GaussianRational& lambda, const PauliOp& p,
                                   const Cone& c, const Window& w);

// Exact certificate: a_side Omega + i b_side Omega == lambda p Omega.
bool dense_decomposition_certificate(const DenseDecomposition& d,
                                     const GaussianRational& lambda, const PauliOp& p);

}  // namespace toric
