#include "toriclab/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "toriclab/rng.hpp"

using namespace toric;

namespace {

constexpr double kTol = 1e-9;

const Window kWindow = Window::make(0, 3, 0, 2);  // 17 bonds

double dist(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }

PauliOp random_interior_pauli(Rng& rng, const Window& w) {
  const auto zs = interior_z_bonds(w);
  const auto xs = interior_x_bonds(w);
  PauliOp p;
  for (const Bond& b : zs)
    if (rng.coin()) p.z_support.push_back(b);
  for (const Bond& b : xs)
    if (rng.coin()) p.x_support.push_back(b);
  p.lambda = static_cast<std::uint8_t>(rng.below(4));
  return p;
}

}  // namespace

TEST(GroundState, StabilizerConditions) {
  const DenseState psi = build_ground_state(kWindow);
  for (const Vertex& s : stars_in_region(Region::all(), kWindow))
    EXPECT_LT(dist(expectation(psi, star_op(s)), {1.0, 0.0}), kTol);
  for (const Plaquette& p : plaquettes_in_region(Region::all(), kWindow))
    EXPECT_LT(dist(expectation(psi, plaquette_op(p)), {1.0, 0.0}), kTol);
}

TEST(GroundState, EnergyAttainsTermCountFloor) {
  const DenseState psi = build_ground_state(kWindow);
  const auto terms = local_hamiltonian_terms(kWindow);
  double energy = 0.0;
  for (const auto& t : terms) energy += t.sign * expectation(psi, t.op).real();
  EXPECT_NEAR(energy, -static_cast<double>(terms.size()), 1e-8);
}

TEST(GroundState, RejectsOversizedWindow) {
  EXPECT_THROW(build_ground_state(Window::make(0, 9, 0, 9)), std::invalid_argument);
}

TEST(ApplyPauli, IdentityAndInvolution) {
  const DenseState psi = build_ground_state(kWindow);
  const DenseState same = apply_pauli(psi, PauliOp::identity());
  for (std::size_t i = 0; i < psi.amp.size(); ++i)
    EXPECT_LT(std::abs(psi.amp[i] - same.amp[i]), 1e-12);

  PauliOp p;
  p.z_support = {east_bond(1, 1)};
  p.x_support = {north_bond(2, 0)};
  ASSERT_TRUE(p.self_adjoint());
  const DenseState twice = apply_pauli(apply_pauli(psi, p), p);
  for (std::size_t i = 0; i < psi.amp.size(); ++i)
    EXPECT_LT(std::abs(psi.amp[i] - twice.amp[i]), 1e-12);
}

TEST(ApplyPauli, HomomorphismAgainstSymbolicMultiply) {
  // The bit-level action composed twice must agree with the symbolic
  // normal-ordered product, including the phase.
  Rng rng(31);
  const DenseState psi = build_ground_state(kWindow);
  const auto bonds = kWindow.bonds();
  for (int trial = 0; trial < 50; ++trial) {
    PauliOp p, q;
    for (const Bond& b : bonds) {
      if (rng.below(4) == 0) p.x_support.push_back(b);
      if (rng.below(4) == 0) p.z_support.push_back(b);
      if (rng.below(4) == 0) q.x_support.push_back(b);
      if (rng.below(4) == 0) q.z_support.push_back(b);
    }
    p.lambda = static_cast<std::uint8_t>(rng.below(4));
    q.lambda = static_cast<std::uint8_t>(rng.below(4));

    const DenseState lhs = apply_pauli(apply_pauli(psi, q), p);
    const DenseState rhs = apply_pauli(psi, multiply(p, q));
    for (std::size_t i = 0; i < psi.amp.size(); ++i)
      ASSERT_LT(std::abs(lhs.amp[i] - rhs.amp[i]), 1e-12);
  }
}

TEST(ApplyPauli, RejectsSupportOutsideWindow) {
  const DenseState psi = build_ground_state(kWindow);
  PauliOp p;
  p.z_support = {east_bond(10, 10)};
  EXPECT_THROW(apply_pauli(psi, p), std::invalid_argument);
}

TEST(Expectation, MatchesClosedFormOnInteriorCases) {
  const DenseState psi = build_ground_state(kWindow);

  PauliOp z;
  z.z_support = {east_bond(1, 1)};  // interior bond
  EXPECT_LT(dist(expectation(psi, z), {0.0, 0.0}), kTol);

  // Interior star: a closed dual loop.
  EXPECT_LT(dist(expectation(psi, star_op({1, 1})), {1.0, 0.0}), kTol);

  // Closed lattice loop fully inside.
  EXPECT_LT(dist(expectation(psi, plaquette_op({{1, 0}})), {1.0, 0.0}), kTol);
}

TEST(CrossValidate, SeededRunHasNoFailures) {
  const CrossValidationReport r = cross_validate(kWindow, 1000, 20240817);
  EXPECT_EQ(r.trials, 1000u);
  EXPECT_TRUE(r.passed());
  EXPECT_LT(r.max_abs_deviation, kTol);
}

TEST(CrossValidate, StabilizerProductsSubSuite) {
  // All products of up to three interior stabilizer generators.
  const DenseState psi = build_ground_state(kWindow);
  std::vector<PauliOp> gens;
  for (const Vertex& s : stars_in_region(Region::all(), kWindow))
    gens.push_back(star_op(s));
  for (const Plaquette& p : plaquettes_in_region(Region::all(), kWindow))
    gens.push_back(plaquette_op(p));

  std::size_t checked = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      for (std::size_t k = j; k < gens.size(); ++k) {
        const PauliOp prod = multiply(gens[i], multiply(gens[j], gens[k]));
        EXPECT_LT(dist(expectation(psi, prod), to_complex(omega(prod))), kTol);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(CrossValidate, NegativeControlDetectsCorruptedPhase) {
  // Deliberately corrupt the phase convention: the comparison machinery
  // must notice. This guards the harness itself.
  const DenseState psi = build_ground_state(kWindow);
  Rng rng(32);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    PauliOp p = random_interior_pauli(rng, kWindow);
    const PauliOp corrupted = scale(Phase::minus_one(), p);
    if (dist(expectation(psi, corrupted), to_complex(omega(p))) > kTol) ++mismatches;
  }
  EXPECT_GT(mismatches, 0u);
}

TEST(CyclicDimension, SingleBondAlgebra) {
  // I, Z_b, X_b, X_b Z_b on an interior bond span a four-dimensional
  // cyclic subspace.
  const Bond b = east_bond(1, 1);
  PauliOp z, x;
  z.z_support = {b};
  x.x_support = {b};
  const std::vector<PauliOp> ops = {PauliOp::identity(), z, x, multiply(x, z)};
  EXPECT_EQ(cyclic_dimension(kWindow, ops), 4u);
}

TEST(CyclicDimension, NoOperatorsAndVacuumOnly) {
  EXPECT_EQ(cyclic_dimension(kWindow, {}), 0u);
  EXPECT_EQ(cyclic_dimension(kWindow, {PauliOp::identity()}), 1u);
}

TEST(CyclicDimension, MatchesSymbolicCensus) {
  const Window census = Window::make(0, 2, 0, 2);
  const SpanCensus sc = span_census(census, 2);
  EXPECT_EQ(cyclic_dimension(census, sc.ops), sc.achieved_rank);
}
