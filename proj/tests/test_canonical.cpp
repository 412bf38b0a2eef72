#include "toriclab/canonical.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "toriclab/rng.hpp"
#include "toriclab/sampling.hpp"

using namespace toric;

namespace {

// The worked cone pair: parallel diagonal edges, apexes one apart.
const Cone kInner = Cone::make({1, 0}, {1, -1}, {1, 1});
const Cone kOuter = Cone::make({0, 0}, {1, -1}, {1, 1});
const Window kWindow = Window::make(-12, 14, -12, 12);

// A pair with apexes two apart: the gap acquires interior sites.
const Cone kInnerWide = Cone::make({2, 0}, {1, -1}, {1, 1});
const Window kWideWindow = Window::make(-10, 13, -11, 12);

bool op_in_cone(const PauliOp& p, const Cone& c) {
  for (const Bond& b : p.x_support)
    if (!cone_contains_bond(c, b)) return false;
  for (const Bond& b : p.z_support)
    if (!cone_contains_bond(c, b)) return false;
  return true;
}

bool op_in_complement(const PauliOp& p, const Cone& c) {
  for (const Bond& b : p.x_support)
    if (cone_contains_bond(c, b)) return false;
  for (const Bond& b : p.z_support)
    if (cone_contains_bond(c, b)) return false;
  return true;
}

bool op_in_gap(const PauliOp& p, const Cone& inner, const Cone& outer) {
  for (const Bond& b : p.x_support)
    if (!cone_contains_bond(outer, b) || cone_contains_bond(inner, b)) return false;
  for (const Bond& b : p.z_support)
    if (!cone_contains_bond(outer, b) || cone_contains_bond(inner, b)) return false;
  return true;
}

void expect_roundtrip(const PauliOp& p, const Scaffold& s) {
  const CanonicalForm f = canonicalize(p, s);
  const auto cert = states_equal(p, f.product());
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(*cert, Phase::one());
  EXPECT_TRUE(op_in_cone(f.f1, s.inner));
  EXPECT_TRUE(op_in_complement(f.f2, s.outer));
  EXPECT_TRUE(op_in_gap(f.fhat, s.inner, s.outer));
}

}  // namespace

TEST(Scaffold, PaperPairHasOnlyTheTwoConnectors) {
  const Scaffold s = build_scaffold(kInner, kOuter, kWindow);
  EXPECT_TRUE(s.interior_vertices.empty());
  EXPECT_TRUE(s.interior_plaquettes.empty());
  ASSERT_EQ(s.strings.size(), 2u);
  EXPECT_FALSE(s.strings[0].dual);
  EXPECT_TRUE(s.strings[1].dual);
  // Connectors run through the gap only.
  for (const ScaffoldString& str : s.strings)
    EXPECT_TRUE(op_in_gap(str.op, kInner, kOuter));
}

TEST(Scaffold, DeterministicAcrossCalls) {
  const Scaffold a = build_scaffold(kInner, kOuter, kWindow);
  const Scaffold b = build_scaffold(kInner, kOuter, kWindow);
  EXPECT_EQ(a.fingerprint(), b.fingerprint());
  ASSERT_EQ(a.strings.size(), b.strings.size());
  for (std::size_t i = 0; i < a.strings.size(); ++i)
    EXPECT_EQ(a.strings[i].op, b.strings[i].op);
}

TEST(Scaffold, RequiresSeparatedCones) {
  EXPECT_THROW(build_scaffold(kInner, kInner, kWindow), std::invalid_argument);
}

TEST(Scaffold, WideGapGrowsInteriorLabels) {
  const Scaffold s = build_scaffold(kInnerWide, kOuter, kWideWindow);
  EXPECT_GT(s.interior_vertices.size(), 0u);
  EXPECT_GT(s.interior_plaquettes.size(), 0u);
  // Every non-anchor interior site owns exactly one string, plus the two
  // connectors and the two anchor strings.
  EXPECT_EQ(s.strings.size(), 2 + 2 + (s.interior_vertices.size() - 1) +
                                  (s.interior_plaquettes.size() - 1));
  for (const ScaffoldString& str : s.strings)
    EXPECT_TRUE(op_in_gap(str.op, kInnerWide, kOuter));
  // Interior sites are exactly the all-four-bonds-in-gap sites.
  for (const Vertex& v : s.interior_vertices) {
    for (const Bond& b : star_bonds(v)) {
      EXPECT_TRUE(cone_contains_bond(kOuter, b));
      EXPECT_FALSE(cone_contains_bond(kInnerWide, b));
    }
  }
}

TEST(F0Group, PaperPairHasFourElements) {
  const Scaffold s = build_scaffold(kInner, kOuter, kWindow);
  const auto elements = f0_group_elements(s, 64);
  ASSERT_EQ(elements.size(), 4u);
  EXPECT_TRUE(elements[0].is_identity());
  // Group closure: the product of any two elements is another element up
  // to phase.
  for (const PauliOp& a : elements) {
    for (const PauliOp& b : elements) {
      const PauliOp ab = multiply(a, b);
      bool found = false;
      for (const PauliOp& c : elements)
        found |= ab.x_support == c.x_support && ab.z_support == c.z_support;
      EXPECT_TRUE(found);
    }
  }
}

TEST(F0Group, CapEnforced) {
  const Scaffold s = build_scaffold(kInnerWide, kOuter, kWideWindow);
  EXPECT_THROW(f0_group_elements(s, 1024), std::invalid_argument);
}

TEST(H0Dimension, PaperConfigurationIsFour) {
  const Scaffold s = build_scaffold(kInner, kOuter, kWindow);
  EXPECT_EQ(h0_dimension(s), 4u);
}

TEST(H0Dimension, EmptyScaffoldIsOne) {
  Scaffold degenerate;
  degenerate.inner = kInner;
  degenerate.outer = kOuter;
  degenerate.window = kWindow;
  EXPECT_EQ(h0_dimension(degenerate), 1u);
}

TEST(H0Dimension, MatchesSyndromeClassCountWithInteriorSites) {
  // Truncate the wide scaffold to the connectors, the two anchors and one
  // interior string of each kind: a six-string collection whose subset
  // products are checked by two independent routes.
  const Scaffold full = build_scaffold(kInnerWide, kOuter, kWideWindow);
  ASSERT_GE(full.interior_vertices.size(), 2u);
  ASSERT_GE(full.interior_plaquettes.size(), 2u);
  Scaffold small = full;
  small.strings = {full.strings[full.idx_connector],
                   full.strings[full.idx_dual_connector],
                   full.strings[*full.idx_vertex_anchor],
                   full.strings[*full.idx_plaquette_anchor],
                   full.strings[full.idx_interior_vertex.front()],
                   full.strings[full.idx_interior_plaquette.front()]};

  const auto elements = f0_group_elements(small, 64);
  ASSERT_EQ(elements.size(), 64u);
  const std::size_t dim = gram(elements).rank;

  std::map<std::pair<std::vector<Vertex>, std::vector<Plaquette>>, int> classes;
  for (const PauliOp& p : elements) {
    const Syndrome syn = syndrome(p);
    classes[{syn.charges, syn.fluxes}]++;
  }
  EXPECT_EQ(dim, classes.size());
  EXPECT_EQ(dim, 64u);  // all endpoint patterns distinct for this collection
}

TEST(Canonicalize, InnerSupportedOperatorPassesThrough) {
  const Scaffold s = build_scaffold(kInner, kOuter, kWindow);
  const Region inner = Region::cone(kInner);
  Rng rng(41);
  const PauliOp p = random_region_string_product(rng, inner, kWindow, 3, 8);
  const CanonicalForm f = canonicalize(p, s);
  EXPECT_EQ(f.phase, Phase::one());
  EXPECT_EQ(f.f1, p);
  EXPECT_TRUE(f.fhat.is_identity());
  EXPECT_TRUE(f.f2.is_identity());
}

TEST(Canonicalize, GapChargeRoutesThroughAnchorStrings) {
  // A string from a gap-interior vertex into the inner cone picks up the
  // interior string and the anchor string, with the remainder inside.
  const Scaffold s = build_scaffold(kInnerWide, kOuter, kWideWindow);
  ASSERT_GE(s.interior_vertices.size(), 2u);
  const Vertex v1 = s.interior_vertices[1];  // non-anchor interior site
  const auto xi = path_between(v1, {9, 0}, Region::all(), kWideWindow);
  ASSERT_TRUE(xi.has_value());
  const PauliOp p = string_from_path(*xi);

  const CanonicalForm f = canonicalize(p, s);
  const auto cert = states_equal(p, f.product());
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(*cert, Phase::one());
  // fhat = (interior string of v1) * (vertex anchor string), nothing else.
  const std::uint64_t expected_mask =
      (std::uint64_t{1} << *s.idx_vertex_anchor) |
      (std::uint64_t{1} << s.idx_interior_vertex.front());
  EXPECT_EQ(f.fhat_mask, expected_mask);
  EXPECT_TRUE(f.f2.is_identity());
}

TEST(Canonicalize, CrossingStringTogglesConnector) {
  // A string from deep in the outer complement to deep in the inner cone
  // must use the lattice connector exactly once.
  const Scaffold s = build_scaffold(kInner, kOuter, kWindow);
  const auto xi = path_between({-8, 8}, {9, 0}, Region::all(), kWindow);
  ASSERT_TRUE(xi.has_value());
  const CanonicalForm f = canonicalize(string_from_path(*xi), s);
  EXPECT_EQ(f.fhat_mask, std::uint64_t{1} << s.idx_connector);
  EXPECT_FALSE(f.f1.is_identity());
  EXPECT_FALSE(f.f2.is_identity());
}

TEST(Canonicalize, RandomRoundTripsOnBothScaffolds) {
  const Scaffold paper = build_scaffold(kInner, kOuter, kWindow);
  const Scaffold wide = build_scaffold(kInnerWide, kOuter, kWideWindow);
  Rng rng(42);
  const Window box = Window::make(-6, 10, -8, 8);
  for (int i = 0; i < 200; ++i) {
    const PauliOp p = random_string_product(rng, box, 4, 12);
    expect_roundtrip(p, paper);
    expect_roundtrip(p, wide);
  }
}

TEST(Canonicalize, PhasedInputsKeepExactCertificates) {
  const Scaffold s = build_scaffold(kInner, kOuter, kWindow);
  Rng rng(43);
  const Window box = Window::make(-5, 9, -7, 7);
  for (int i = 0; i < 50; ++i) {
    PauliOp p = random_string_product(rng, box, 3, 9);
    p = scale(Phase{static_cast<std::uint8_t>(rng.below(4))}, p);
    const CanonicalForm f = canonicalize(p, s);
    const auto cert = states_equal(p, f.product());
    ASSERT_TRUE(cert.has_value());
    EXPECT_EQ(*cert, Phase::one());
  }
}

TEST(Uniqueness, AlternateRoutesAgreeUpToSign) {
  // The thin gap of the worked pair has unique geodesics, so also run the
  // wide pair, whose gap admits genuinely different routes.
  struct Case {
    Cone inner;
    Window window;
  };
  for (const Case& cs : {Case{kInner, kWindow}, Case{kInnerWide, kWideWindow}}) {
    const Scaffold a = build_scaffold(cs.inner, kOuter, cs.window);
    const Scaffold b =
        build_scaffold(cs.inner, kOuter, cs.window, NeighborOrder::Reversed);
    Rng rng(44);
    const Window box = Window::make(-6, 10, -8, 8);
    for (int i = 0; i < 100; ++i) {
      const PauliOp p = random_string_product(rng, box, 4, 10);
      const CanonicalForm fa = canonicalize(p, a);
      const CanonicalForm fb = canonicalize(p, b);
      EXPECT_TRUE(canonical_uniqueness_check(a, fa, b, fb));
      EXPECT_EQ(fa.fhat_mask, fb.fhat_mask);
    }
  }
}

TEST(Uniqueness, WideScaffoldRoutesActuallyDiffer) {
  const Scaffold a = build_scaffold(kInnerWide, kOuter, kWideWindow);
  const Scaffold b =
      build_scaffold(kInnerWide, kOuter, kWideWindow, NeighborOrder::Reversed);
  EXPECT_NE(a.fingerprint(), b.fingerprint());
  // Same endpoints, different routes somewhere.
  EXPECT_EQ(a.connector_inner_end, b.connector_inner_end);
  EXPECT_EQ(a.connector_outer_end, b.connector_outer_end);
  bool any_different = false;
  ASSERT_EQ(a.strings.size(), b.strings.size());
  for (std::size_t i = 0; i < a.strings.size(); ++i)
    any_different |= !(a.strings[i].op == b.strings[i].op);
  EXPECT_TRUE(any_different);
}

TEST(Uniqueness, IdenticalFormsPass) {
  const Scaffold s = build_scaffold(kInner, kOuter, kWindow);
  Rng rng(45);
  const PauliOp p = random_string_product(rng, Window::make(-4, 8, -6, 6), 3, 8);
  const CanonicalForm f = canonicalize(p, s);
  EXPECT_TRUE(canonical_uniqueness_check(s, f, s, f));
}

TEST(Uniqueness, RejectsUnequalStates) {
  const Scaffold s = build_scaffold(kInner, kOuter, kWindow);
  // Two operators with different gap syndromes produce unequal states.
  const auto xi1 = path_between({-8, 8}, {9, 0}, Region::all(), kWindow);
  ASSERT_TRUE(xi1.has_value());
  const CanonicalForm f1 = canonicalize(string_from_path(*xi1), s);
  const CanonicalForm f2 = canonicalize(PauliOp::identity(), s);
  EXPECT_THROW(canonical_uniqueness_check(s, f1, s, f2), std::invalid_argument);
}

TEST(PullIn, DualPathHuggingTheEdge) {
  // A dual path outside the cone with boundary end plaquettes rewrites to
  // an interior dual path acting identically on the ground vector.
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-4, 8, -4, 8);
  const auto bp = boundary_plaquettes(c, w);
  // Walk just below the x-axis edge between two boundary plaquettes.
  DualPath outside{{{{1, 0}}, {{1, -1}}, {{2, -1}}, {{3, -1}}, {{3, 0}}}};
  ASSERT_TRUE(std::count(bp.begin(), bp.end(), outside.plaquettes.front()) == 1);
  ASSERT_TRUE(std::count(bp.begin(), bp.end(), outside.plaquettes.back()) == 1);
  for (const Bond& b : outside.crossed_bonds())
    ASSERT_FALSE(cone_contains_bond(c, b));

  const DualPath inside = pull_in(outside, c, w);
  for (const Bond& b : inside.crossed_bonds())
    EXPECT_TRUE(cone_contains_bond(c, b));
  const auto se = states_equal(string_from_dual_path(outside),
                               string_from_dual_path(inside));
  ASSERT_TRUE(se.has_value());
  EXPECT_EQ(*se, Phase::one());
}

TEST(PullIn, LatticePathWithBoundaryEndpoints) {
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-4, 8, -4, 8);
  // From (3,0) to (0,4), walking outside the sector.
  Path outside{{{3, 0}, {3, -1}, {2, -1}, {1, -1}, {0, -1}, {-1, -1},
                {-1, 0}, {-1, 1}, {-1, 2}, {-1, 3}, {-1, 4}, {0, 4}}};
  for (const Bond& b : outside.bond_set())
    ASSERT_FALSE(cone_contains_bond(c, b));
  const Path inside = pull_in(outside, c, w);
  EXPECT_EQ(inside.vertices.front(), (Vertex{3, 0}));
  EXPECT_EQ(inside.vertices.back(), (Vertex{0, 4}));
  for (const Bond& b : inside.bond_set())
    EXPECT_TRUE(cone_contains_bond(c, b));
  const auto se =
      states_equal(string_from_path(outside), string_from_path(inside));
  ASSERT_TRUE(se.has_value());
  EXPECT_EQ(*se, Phase::one());
}

TEST(PullIn, AlreadyInsideReturnsUnchanged) {
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-4, 8, -4, 8);
  Path inside{{{2, 1}, {2, 2}, {3, 2}}};
  EXPECT_EQ(pull_in(inside, c, w).vertices, inside.vertices);
}

TEST(PullIn, RejectsNonBoundaryEndpoints) {
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-4, 8, -4, 8);
  Path deep{{{-3, -3}, {-2, -3}}};
  EXPECT_THROW(pull_in(deep, c, w), std::invalid_argument);
}

TEST(Classify, DeepDualStringGivesPlaquetteWitness) {
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-6, 6, -6, 6);
  DualPath deep{{{{-4, -4}}, {{-3, -4}}, {{-2, -4}}}};
  const PauliOp p = string_from_dual_path(deep);
  const ClassifyOutcome out = classify_excitation(p, c, w);
  ASSERT_EQ(out.kind, ClassifyOutcome::Kind::Witness);
  EXPECT_FALSE(out.site.is_star);
  EXPECT_FALSE(commutes(out.stabilizer, p));
  for (const Bond& b : out.stabilizer.z_support)
    EXPECT_FALSE(cone_contains_bond(c, b));
}

TEST(Classify, BoundaryEndpointsGiveRepresentative) {
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-6, 8, -6, 8);
  // A complement path joining two boundary vertices.
  Path outside{{{3, 0}, {3, -1}, {4, -1}, {5, -1}, {5, 0}}};
  for (const Bond& b : outside.bond_set())
    ASSERT_FALSE(cone_contains_bond(c, b));
  const PauliOp p = string_from_path(outside);
  const ClassifyOutcome out = classify_excitation(p, c, w);
  ASSERT_EQ(out.kind, ClassifyOutcome::Kind::InRepresentative);
  const auto se = states_equal(p, out.representative);
  ASSERT_TRUE(se.has_value());
  EXPECT_EQ(*se, out.phase);
}

TEST(Classify, ComplementStabilizersAreRepresentedByIdentityClass) {
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-6, 6, -6, 6);
  const PauliOp p =
      multiply(plaquette_op({{-3, -3}}), plaquette_op({{-4, -3}}));
  const ClassifyOutcome out = classify_excitation(p, c, w);
  ASSERT_EQ(out.kind, ClassifyOutcome::Kind::InRepresentative);
  EXPECT_TRUE(out.representative.is_identity());
  EXPECT_EQ(out.phase, Phase::one());
}

TEST(Classify, RejectsOperatorsTouchingTheCone) {
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-6, 6, -6, 6);
  PauliOp p;
  p.z_support = {east_bond(2, 2)};  // inside the cone
  EXPECT_THROW(classify_excitation(p, c, w), std::invalid_argument);
}

TEST(DenseDecompose, SelfAdjointDirectCase) {
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-5, 6, -5, 6);
  const PauliOp p = string_from_path(Path{{{2, 1}, {2, 2}, {3, 2}}});
  ASSERT_TRUE(p.self_adjoint());
  const auto d = dense_decompose(GaussianRational::one(), p, c, w);
  EXPECT_TRUE(dense_decomposition_certificate(d, GaussianRational::one(), p));
  ASSERT_EQ(d.a_side.terms.size(), 1u);
  EXPECT_TRUE(d.b_side.terms.empty());
  EXPECT_EQ(d.a_side.terms[0].op, p);
}

TEST(DenseDecompose, StabilizerFlipCaseMatchesWorkedSign) {
  // lambda = i with a self-adjoint string and an anticommuting star deep
  // in the cone: A = -(i A_s P), B = 0, and A Omega = i P Omega.
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-5, 6, -5, 6);
  const PauliOp p = string_from_path(Path{{{2, 1}, {2, 2}, {3, 2}}});
  const GaussianRational i{0, 1};
  const auto d = dense_decompose(i, p, c, w);
  EXPECT_TRUE(dense_decomposition_certificate(d, i, p));
  ASSERT_EQ(d.a_side.terms.size(), 1u);
  EXPECT_TRUE(d.b_side.terms.empty());
  const auto& term = d.a_side.terms[0];
  EXPECT_TRUE(term.op.self_adjoint());
  EXPECT_EQ(term.coeff, (GaussianRational{-1, 0}));
  // The term reproduces i P Omega exactly.
  ExcitationVector lhs{{term}};
  ExcitationVector rhs = ExcitationVector::unit(p).scaled(i);
  ExcitationVector diff = lhs + rhs.scaled({-1, 0});
  EXPECT_EQ(norm2(diff), 0);
}

TEST(DenseDecompose, BoundaryOnlySyndromeUsesTheMirror) {
  // All excitations on the cone edge, lambda = i: the complement mirror
  // carries the vector, the cone side is empty.
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-5, 6, -5, 6);
  const PauliOp p =
      string_from_path(Path{{{1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 0}}});
  ASSERT_TRUE(p.self_adjoint());
  const GaussianRational i{0, 1};
  const auto d = dense_decompose(i, p, c, w);
  EXPECT_TRUE(dense_decomposition_certificate(d, i, p));
  EXPECT_TRUE(d.a_side.terms.empty());
  ASSERT_EQ(d.b_side.terms.size(), 1u);
  EXPECT_TRUE(d.b_side.terms[0].op.self_adjoint());
  for (const Bond& b : d.b_side.terms[0].op.z_support)
    EXPECT_FALSE(cone_contains_bond(c, b));
}

TEST(DenseDecompose, AntiSelfAdjointCases) {
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-5, 6, -5, 6);
  // X and Z on one interior bond anticommute: the product is
  // anti-self-adjoint.
  const Bond b = east_bond(2, 2);
  PauliOp p;
  p.x_support = {b};
  p.z_support = {b};
  ASSERT_FALSE(p.self_adjoint());

  for (const GaussianRational& lambda :
       {GaussianRational::one(), GaussianRational{0, 1}, GaussianRational{1, 1}}) {
    const auto d = dense_decompose(lambda, p, c, w);
    EXPECT_TRUE(dense_decomposition_certificate(d, lambda, p));
    for (const auto& t : d.a_side.terms) {
      EXPECT_TRUE(t.op.self_adjoint());
      EXPECT_EQ(t.coeff.im, 0);
      EXPECT_TRUE(op_in_cone(t.op, c));
    }
    for (const auto& t : d.b_side.terms) {
      EXPECT_TRUE(t.op.self_adjoint());
      EXPECT_EQ(t.coeff.im, 0);
      EXPECT_TRUE(op_in_complement(t.op, c));
    }
  }
}

TEST(DenseDecompose, TrivialSyndromeStabilizers) {
  // A plaquette operator inside the cone acts as the identity on the
  // ground vector; both primitives must still decompose exactly.
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-5, 6, -5, 6);
  const PauliOp p = plaquette_op({{2, 2}});
  const GaussianRational lam{1, 1};
  const auto d = dense_decompose(lam, p, c, w);
  EXPECT_TRUE(dense_decomposition_certificate(d, lam, p));
}

TEST(DenseDecompose, RejectsOperatorsOutsideTheCone) {
  const Cone c = Cone::make({0, 0}, {1, 0}, {0, 1});
  const Window w = Window::make(-5, 6, -5, 6);
  PauliOp p;
  p.z_support = {east_bond(-3, -3)};
  EXPECT_THROW(dense_decompose(GaussianRational::one(), p, c, w),
               std::invalid_argument);
}
