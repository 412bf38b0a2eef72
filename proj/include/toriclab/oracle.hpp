#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "toriclab/pauli.hpp"
#include "toriclab/vacuum.hpp"

// Independent dense state-vector cross-check. This module rebuilds the
// ground state of a finite bond window numerically and applies Pauli
// operators bit by bit in the Z basis; it shares no algebra with the
// symbolic functional it validates. Agreement with the closed-form
// functional is exact (to rounding) for operators whose touched stars
// and plaquettes are fully interior to the window.

namespace toric {

struct DenseState {
  Window window;
  std::vector<Bond> bonds;                 // canonical order; bit k <-> bonds[k]
  std::vector<std::complex<double>> amp;   // 2^n amplitudes, Z eigenbasis

  std::size_t n() const { return bonds.size(); }
};

inline constexpr std::size_t kMaxOracleBonds = 22;

// Normalized projection of the all-up basis state onto the joint +1
// eigenspace of every interior star; every interior plaquette condition
// holds automatically in the Z basis. Verifies all stabilizer conditions
// to 1e-9 before returning. Throws std::invalid_argument if the window
// has more than kMaxOracleBonds bonds.
DenseState build_ground_state(const Window& w);

// Exact action in the Z basis: X flips bits, Z applies (-1)^bit, with
// global phase i^lambda. Throws if the support leaves the window.
DenseState apply_pauli(const DenseState& psi, const PauliOp& p);

std::complex<double> expectation(const DenseState& psi, const PauliOp& p);

struct CrossValidationFailure {
  PauliOp op;
  std::complex<double> dense;
  std::complex<double> symbolic;
  double deviation = 0.0;
};

struct CrossValidationReport {
  Window window;
  std::size_t trials = 0;
  double max_abs_deviation = 0.0;
  std::vector<CrossValidationFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Seeded random interior-supported operators; each compares the dense
// expectation against the closed-form functional at tolerance 1e-9.
CrossValidationReport cross_validate(const Window& w, std::size_t trials,
                                     std::uint64_t seed);

// Numerical dimension of span{P psi : P in ops} at SVD tolerance 1e-8.
std::size_t cyclic_dimension(const Window& w, const std::vector<PauliOp>& ops);

std::complex<double> to_complex(const GaussianRational& g);

}  // namespace toric
