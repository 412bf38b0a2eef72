#include "toriclab/pauli.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "toriclab/rng.hpp"
#include "toriclab/sampling.hpp"

using namespace toric;

namespace {

PauliOp random_pauli(Rng& rng, const Window& box) {
  PauliOp p;
  const auto bonds = box.bonds();
  for (const Bond& b : bonds) {
    if (rng.below(4) == 0) p.x_support.push_back(b);
    if (rng.below(4) == 0) p.z_support.push_back(b);
  }
  p.lambda = static_cast<std::uint8_t>(rng.below(4));
  return p;
}

PauliOp z_op(std::vector<Bond> bonds) {
  std::sort(bonds.begin(), bonds.end());
  PauliOp p;
  p.z_support = std::move(bonds);
  return p;
}

PauliOp x_op(std::vector<Bond> bonds) {
  std::sort(bonds.begin(), bonds.end());
  PauliOp p;
  p.x_support = std::move(bonds);
  return p;
}

}  // namespace

TEST(Multiply, StarsSquareToIdentity) {
  const PauliOp a = star_op({2, 3});
  EXPECT_EQ(multiply(a, a), PauliOp::identity());
}

TEST(Multiply, SingleBondAnticommutation) {
  const Bond b = east_bond(0, 0);
  const PauliOp z = z_op({b}), x = x_op({b});
  const PauliOp zx = multiply(z, x);
  const PauliOp xz = multiply(x, z);
  EXPECT_EQ(zx.x_support, xz.x_support);
  EXPECT_EQ(zx.z_support, xz.z_support);
  EXPECT_EQ((zx.lambda + 4 - xz.lambda) % 4, 2u);  // overall factor -1
}

TEST(Multiply, StarsAndPlaquettesCommute) {
  const Window w = Window::make(-2, 3, -2, 3);
  for (const Vertex& v : w.vertices()) {
    for (const Plaquette& p : w.plaquettes()) {
      const PauliOp a = star_op(v), b = plaquette_op(p);
      EXPECT_EQ(multiply(a, b), multiply(b, a));
      EXPECT_TRUE(commutes(a, b));
    }
  }
}

TEST(Multiply, GroupLawsOnRandomTriples) {
  Rng rng(11);
  const Window box = Window::make(0, 4, 0, 4);
  for (int i = 0; i < 200; ++i) {
    const PauliOp p = random_pauli(rng, box);
    const PauliOp q = random_pauli(rng, box);
    const PauliOp r = random_pauli(rng, box);
    EXPECT_EQ(multiply(multiply(p, q), r), multiply(p, multiply(q, r)));
    EXPECT_EQ(multiply(p, PauliOp::identity()), p);
    EXPECT_EQ(multiply(PauliOp::identity(), p), p);
    // Inverse: P * P^-1 = I with P^-1 = adjoint (Pauli operators are
    // unitary).
    EXPECT_EQ(multiply(p, adjoint(p)), PauliOp::identity());
  }
}

TEST(Adjoint, StringOperatorsAreSelfAdjoint) {
  Rng rng(12);
  const Window box = Window::make(0, 5, 0, 5);
  for (int i = 0; i < 50; ++i) {
    const PauliOp f = string_from_path(random_walk_path(rng, box, 7));
    EXPECT_EQ(adjoint(f), f);
    EXPECT_TRUE(f.self_adjoint());
    const PauliOp g = string_from_dual_path(random_walk_dual(rng, box, 7));
    EXPECT_EQ(adjoint(g), g);
  }
}

TEST(Adjoint, PhaseExample) {
  PauliOp p = x_op({east_bond(0, 0)});
  p.lambda = 1;  // i * X
  const PauliOp q = adjoint(p);
  EXPECT_EQ(q.lambda, 3u);  // -i * X
  EXPECT_EQ(q.x_support, p.x_support);
}

TEST(Adjoint, AntihomomorphismOnRandomPairs) {
  Rng rng(13);
  const Window box = Window::make(0, 4, 0, 4);
  for (int i = 0; i < 100; ++i) {
    const PauliOp p = random_pauli(rng, box);
    const PauliOp q = random_pauli(rng, box);
    EXPECT_EQ(adjoint(multiply(p, q)), multiply(adjoint(q), adjoint(p)));
    EXPECT_EQ(adjoint(adjoint(p)), p);
  }
}

TEST(Adjoint, PhaseDiscipline) {
  Rng rng(14);
  const Window box = Window::make(0, 4, 0, 4);
  for (int i = 0; i < 100; ++i) {
    const PauliOp p = random_pauli(rng, box);
    const std::size_t overlap = bond_intersection_size(p.x_support, p.z_support);
    EXPECT_EQ(p.self_adjoint(), p.lambda % 2 == overlap % 2);
    // P^2 is the identity up to the documented phase.
    const PauliOp sq = multiply(p, p);
    EXPECT_TRUE(sq.is_identity_up_to_phase());
    EXPECT_EQ(sq.lambda, (2 * p.lambda + 2 * overlap) % 4);
  }
}

TEST(Commutes, StringAgainstEndpointStar) {
  Path xi{{{0, 0}, {1, 0}, {2, 0}, {2, 1}}};
  const PauliOp f = string_from_path(xi);
  EXPECT_FALSE(commutes(f, star_op({0, 0})));  // endpoint
  EXPECT_FALSE(commutes(f, star_op({2, 1})));  // endpoint
  EXPECT_TRUE(commutes(f, star_op({1, 0})));   // interior vertex
  // Z strings commute with every plaquette operator.
  const Window w = Window::make(-2, 4, -2, 3);
  for (const Plaquette& p : w.plaquettes())
    EXPECT_TRUE(commutes(f, plaquette_op(p)));
}

TEST(Commutes, AgreesWithMultiplyOnRandomPairs) {
  Rng rng(15);
  const Window box = Window::make(0, 4, 0, 4);
  for (int i = 0; i < 500; ++i) {
    const PauliOp p = random_pauli(rng, box);
    const PauliOp q = random_pauli(rng, box);
    const PauliOp pq = multiply(p, q), qp = multiply(q, p);
    EXPECT_EQ(commutes(p, q), pq == qp);
  }
}

TEST(Strings, EmptyPathGivesIdentity) {
  EXPECT_EQ(string_from_path(Path{}), PauliOp::identity());
  EXPECT_EQ(string_from_path(Path{{{3, 3}}}), PauliOp::identity());
  EXPECT_EQ(string_from_dual_path(DualPath{}), PauliOp::identity());
}

TEST(Strings, UnitSquareLoopEqualsPlaquette) {
  Path loop{{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}};
  EXPECT_EQ(string_from_path(loop), plaquette_op({{0, 0}}));
}

TEST(Strings, OpenPathChargesAtEndpoints) {
  Path xi{{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}};
  const Syndrome s = syndrome(string_from_path(xi));
  EXPECT_EQ(s.charges, (std::vector<Vertex>{{0, 0}, {2, 2}}));
  EXPECT_TRUE(s.fluxes.empty());
}

TEST(Strings, OpenDualPathFluxesAtEndPlaquettes) {
  DualPath xi{{{{0, 0}}, {{1, 0}}, {{1, 1}}, {{2, 1}}}};
  const Syndrome s = syndrome(string_from_dual_path(xi));
  EXPECT_TRUE(s.charges.empty());
  EXPECT_EQ(s.fluxes, (std::vector<Plaquette>{{{0, 0}}, {{2, 1}}}));
}

TEST(StabilizerOps, Shapes) {
  const PauliOp a = star_op({4, -2});
  EXPECT_EQ(a.lambda, 0u);
  EXPECT_EQ(a.x_support.size(), 4u);
  EXPECT_TRUE(a.z_support.empty());

  const PauliOp b = plaquette_op({{4, -2}});
  EXPECT_EQ(b.lambda, 0u);
  EXPECT_EQ(b.z_support.size(), 4u);
  EXPECT_TRUE(b.x_support.empty());
}

TEST(StabilizerOps, FourStarsAroundPlaquetteFormDualLoop) {
  // The product of the four corner stars of a plaquette leaves a closed
  // dual loop of length 8.
  const Plaquette p{{0, 0}};
  PauliOp prod = PauliOp::identity();
  for (const Vertex& v :
       {Vertex{0, 0}, Vertex{1, 0}, Vertex{0, 1}, Vertex{1, 1}})
    prod = multiply(prod, star_op(v));
  EXPECT_EQ(prod.x_support.size(), 8u);
  EXPECT_TRUE(is_dual_cycle(prod.x_support));
  EXPECT_EQ(prod.lambda, 0u);
  (void)p;
}

TEST(Syndrome, IdentityAndStars) {
  EXPECT_TRUE(syndrome(PauliOp::identity()).trivial());
  EXPECT_TRUE(syndrome(star_op({1, 1})).trivial());
  EXPECT_TRUE(syndrome(plaquette_op({{1, 1}})).trivial());
}

TEST(Syndrome, AdditivityUnderProducts) {
  Rng rng(16);
  const Window box = Window::make(0, 4, 0, 4);
  for (int i = 0; i < 200; ++i) {
    const PauliOp p = random_pauli(rng, box);
    const PauliOp q = random_pauli(rng, box);
    EXPECT_EQ(syndrome(multiply(p, q)), syndrome_xor(syndrome(p), syndrome(q)));
  }
}

TEST(Syndrome, EvenCounts) {
  Rng rng(17);
  const Window box = Window::make(0, 5, 0, 5);
  for (int i = 0; i < 100; ++i) {
    const Syndrome s = syndrome(random_pauli(rng, box));
    EXPECT_EQ(s.charges.size() % 2, 0u);
    EXPECT_EQ(s.fluxes.size() % 2, 0u);
  }
}

TEST(Cycles, BasicExamples) {
  EXPECT_TRUE(is_cycle({}));
  EXPECT_FALSE(is_cycle({east_bond(0, 0)}));
  EXPECT_TRUE(is_dual_cycle({}));
  EXPECT_FALSE(is_dual_cycle({east_bond(0, 0)}));

  const PauliOp b = plaquette_op({{2, 2}});
  EXPECT_TRUE(is_cycle(b.z_support));
  const PauliOp a = star_op({2, 2});
  EXPECT_TRUE(is_dual_cycle(a.x_support));
}

TEST(Cycles, StabilizerKernelCharacterization) {
  Rng rng(18);
  const Window box = Window::make(0, 4, 0, 4);
  for (int i = 0; i < 200; ++i) {
    const PauliOp p = random_pauli(rng, box);
    const bool trivial = syndrome(p).trivial();
    EXPECT_EQ(trivial, is_cycle(p.z_support) && is_dual_cycle(p.x_support));
  }
}

TEST(ExpressAsSum, UnitSquareAndRectangle) {
  const PauliOp b = plaquette_op({{0, 0}});
  EXPECT_EQ(express_as_plaquette_sum(b.z_support),
            (std::vector<Plaquette>{{{0, 0}}}));

  const Path rect = rectangle_loop(0, 2, 0, 1);
  EXPECT_EQ(express_as_plaquette_sum(rect.bond_set()),
            (std::vector<Plaquette>{{{0, 0}}, {{1, 0}}}));
}

TEST(ExpressAsSum, RandomCyclesRoundTrip) {
  // Random plaquette subsets give random cycles; the fill must recover
  // the exact subset, and multiplying the stabilizers back reproduces
  // the support with phase +1.
  Rng rng(19);
  const Window w = Window::make(0, 9, 0, 9);
  const auto plaqs = w.plaquettes();
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Plaquette> subset;
    for (const Plaquette& p : plaqs)
      if (rng.below(3) == 0) subset.push_back(p);

    PauliOp prod = PauliOp::identity();
    for (const Plaquette& p : subset) prod = multiply(prod, plaquette_op(p));
    ASSERT_TRUE(is_cycle(prod.z_support));
    EXPECT_EQ(express_as_plaquette_sum(prod.z_support), subset);
    EXPECT_EQ(prod.lambda, 0u);
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vertex> subset;
    for (const Vertex& v : w.vertices())
      if (rng.below(3) == 0) subset.push_back(v);

    PauliOp prod = PauliOp::identity();
    for (const Vertex& v : subset) prod = multiply(prod, star_op(v));
    ASSERT_TRUE(is_dual_cycle(prod.x_support));
    EXPECT_EQ(express_as_star_sum(prod.x_support), subset);
    EXPECT_EQ(prod.lambda, 0u);
  }
}

TEST(ExpressAsSum, RejectsNonCycles) {
  EXPECT_THROW(express_as_plaquette_sum({east_bond(0, 0)}), NotACycle);
  EXPECT_THROW(express_as_star_sum({east_bond(0, 0)}), NotACycle);
}

TEST(IntersectionParity, FarAndConcentric) {
  const Path loop = rectangle_loop(0, 1, 0, 1);
  const DualPath far = rectangle_dual_loop(5, 7, 5, 7);
  EXPECT_EQ(intersection_parity(loop, far), 0);

  // A dual loop threading through a larger lattice loop crosses it twice.
  const Path big = rectangle_loop(0, 4, 0, 4);
  const DualPath threading = rectangle_dual_loop(1, 6, 1, 2);
  const auto shared =
      bond_intersection_size(big.bond_set(), threading.crossed_bonds());
  EXPECT_EQ(shared, 2u);
  EXPECT_EQ(intersection_parity(big, threading), 0);
}

TEST(IntersectionParity, RandomClosedPairsAlwaysEven) {
  Rng rng(20);
  const Window w = Window::make(-6, 6, -6, 6);
  for (int i = 0; i < 200; ++i) {
    const Path loop = random_rectangle_loop(rng, w);
    const DualPath dual = random_rectangle_dual_loop(rng, w);
    EXPECT_EQ(intersection_parity(loop, dual), 0);
  }
}

TEST(IntersectionParity, RequiresClosedInputs) {
  Path open{{{0, 0}, {1, 0}}};
  const DualPath loop = rectangle_dual_loop(0, 2, 0, 2);
  EXPECT_THROW(intersection_parity(open, loop), std::invalid_argument);
}

TEST(Hamiltonian, ThreeByThreeTermCount) {
  const auto terms = local_hamiltonian_terms(Window::make(0, 2, 0, 2));
  ASSERT_EQ(terms.size(), 5u);  // 1 star + 4 plaquettes
  std::size_t stars = 0;
  for (const auto& t : terms) {
    EXPECT_EQ(t.sign, -1);
    EXPECT_EQ(t.op.lambda, 0u);
    EXPECT_TRUE(t.op.self_adjoint());
    if (t.op.z_support.empty()) ++stars;
  }
  EXPECT_EQ(stars, 1u);
}

TEST(Hamiltonian, TermsPairwiseCommute) {
  const auto terms = local_hamiltonian_terms(Window::make(0, 4, 0, 3));
  for (const auto& a : terms)
    for (const auto& b : terms) EXPECT_TRUE(commutes(a.op, b.op));
}
