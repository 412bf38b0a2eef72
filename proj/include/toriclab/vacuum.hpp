#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "toriclab/pauli.hpp"

// The ground-state functional in closed form and the exact linear algebra
// built on it: inner products of excitation vectors, state equality up to
// phase, Gram matrices with fraction-free rank, and the finite span census.
//
// The functional is determined by giving every star and plaquette operator
// expectation one. Writing P = i^l X(a) Z(b), repeated insertion of
// stabilizers (each of which fixes the state) forces
//
//     omega(P) = i^l   if a is a dual cycle and b is a cycle,
//     omega(P) = 0     otherwise,
//
// because any odd-degree vertex of b (odd-overlap plaquette of a) yields a
// star (plaquette) operator that anticommutes with P and fixes the state.
// The dense oracle module validates this closed form independently.

namespace toric {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct GaussianRational {
  Rat re = 0;
  Rat im = 0;

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {1, 0}; }
  static GaussianRational from_phase(Phase p);

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rat abs2() const { return re * re + im * im; }

  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string str() const;  // "p/q" components, exact
};

// Closed-form ground functional.
std::optional<Phase> omega_phase(const PauliOp& p);
GaussianRational omega(const PauliOp& p);

// Formal finite combination sum_k c_k P_k applied to the ground vector.
// Compared only through omega; the representation is intentionally
// redundant and equality means vanishing norm of the difference.
struct ExcitationVector {
  struct Term {
    GaussianRational coeff;
    PauliOp op;
  };
  std::vector<Term> terms;

  static ExcitationVector zero() { return {}; }
  static ExcitationVector unit(PauliOp op) {
    return {{{GaussianRational::one(), std::move(op)}}};
  }
  ExcitationVector operator+(const ExcitationVector& o) const;
  ExcitationVector scaled(const GaussianRational& c) const;
};

// Sesquilinear pairing <u, v> = sum conj(c_j) c_k omega(P_j^* P_k),
// antilinear in the first argument.
GaussianRational inner(const ExcitationVector& u, const ExcitationVector& v);
Rat norm2(const ExcitationVector& u);

// Some(c) iff P Omega = c Q Omega; None when the states are orthogonal
// (Pauli vectors are unit vectors, so these are the only cases).
std::optional<Phase> states_equal(const PauliOp& p, const PauliOp& q);

struct GramSummary {
  std::vector<std::vector<GaussianRational>> matrix;  // omega(P_j^* P_k)
  std::size_t rank = 0;
  std::vector<std::size_t> basis_indices;  // a maximal independent subfamily
};

// Exact Gram matrix and its rank by fraction-free (Bareiss) elimination
// over the Gaussian integers.
GramSummary gram(const std::vector<PauliOp>& ops);

// Verifies omega(XY) == omega(YX) == omega(Y) for a self-adjoint X with
// omega(X) = 1 (and X^2 = I, which for Pauli operators is the same
// condition). Throws std::invalid_argument if the preconditions fail.
bool lemma1_check(const PauliOp& x, const PauliOp& y);

// All products of at most `max_factors` distinct generators, multiplied
// in list order; the empty product (identity) is included.
std::vector<PauliOp> enumerate_products(const std::vector<PauliOp>& generators,
                                        int max_factors);

// Number of distinct rays {P Omega} among the given operators, computed
// exactly by reducing supports modulo the window's cycle and dual-cycle
// spaces over GF(2). Equals the rank of gram(ops): vectors in one class
// are equal up to phase and distinct classes are orthogonal.
// Requires every support bond to lie in the window; window capped at 64
// bonds (throws std::invalid_argument otherwise).
std::size_t pauli_class_count(const std::vector<PauliOp>& ops, const Window& w);

struct SpanCensus {
  std::size_t achieved_rank = 0;
  std::vector<PauliOp> ops;  // the operator family the rank refers to
};

// Products of <= max_factors single-bond strings (Z_b and X_b for every
// window bond), with the achieved rank of their span on the ground vector.
SpanCensus span_census(const Window& w, int max_factors);

}  // namespace toric
