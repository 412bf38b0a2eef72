#pragma once

#include <cstdint>
#include <string>

#include "toriclab/canonical.hpp"

// The split unitary as a relabeling of canonical forms: a vector
// phase * F1 Fhat F2 Omega maps to phase * (F1 Omega x F2 Omega x Fhat Omega).
// The unitary is never materialized; every claim about it is checked
// through exact pairings of the labels.

namespace toric {

struct TensorLabel {
  Phase phase;
  PauliOp left;    // F1, supports in the inner cone
  PauliOp middle;  // F2, supports in the outer complement
  PauliOp right;   // Fhat, scaffold subset product
  std::uint64_t fhat_mask = 0;
  std::uint64_t scaffold_fp = 0;

  // The vector the label was produced from: phase * F1 Fhat F2.
  PauliOp preimage() const {
    return scale(phase, multiply(left, multiply(right, middle)));
  }
};

// Checks the component memberships and packages the canonical form.
TensorLabel to_tensor_label(const CanonicalForm& f, const Scaffold& s);

// Factorized pairing conj(phase) phase' *
// omega(F1* F1') omega(F2* F2') omega(Fhat* Fhat').
// Throws std::invalid_argument when the labels belong to different scaffolds.
GaussianRational tensor_inner(const TensorLabel& a, const TensorLabel& b);

struct CheckReport {
  std::size_t total = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  void fail(const std::string& what) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
};

// Samples pairs of random string products in the sample box, canonicalizes
// both, and compares the ground-space pairing against the factorized
// tensor pairing; every comparison is exact.
CheckReport verify_isometry(const Scaffold& s, const Window& sample_box,
                            std::size_t samples, std::uint64_t seed);

// omega(F1 F2) == omega(F1) * omega(F2) for disjointly supported factors.
// Throws std::invalid_argument on a membership violation.
bool verify_factorization(const PauliOp& f1, const PauliOp& f2, const Cone& c1,
                          const Cone& c2);

// Exhaustive factorization census over all rectangle loops (lattice and
// dual) supported in the inner cone paired with those in the outer
// complement, within the window.
CheckReport factorization_census(const Cone& c1, const Cone& c2, const Window& w);

// Conjugation by an inner-cone operator only changes the left label slot:
// canonicalizing A * preimage(t) must reproduce t's middle and right
// components up to the tracked sign and a left slot equal to A*F1 as a
// state. Exact certificates throughout.
bool conjugation_check(const PauliOp& a, const TensorLabel& t, const Scaffold& s);

// Mirror statement for an outer-complement operator and the middle slot.
bool mirror_conjugation_check(const PauliOp& b, const TensorLabel& t, const Scaffold& s);

}  // namespace toric
