#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toriclab/lattice.hpp"

// Finitely supported Pauli operators on the bond lattice, written in the
// fixed normal order
//
//     P = i^lambda * X(a) * Z(b),
//
// where a is the X-support, b the Z-support (sorted bond sets) and
// lambda is an exponent mod 4. All phase bookkeeping in the library
// depends on this single convention.

namespace toric {

// i^k as a tiny exact value type.
struct Phase {
  std::uint8_t k = 0;  // value = i^k, k in {0,1,2,3}

  static Phase one() { return {0}; }
  static Phase i() { return {1}; }
  static Phase minus_one() { return {2}; }
  static Phase minus_i() { return {3}; }

  Phase operator*(Phase o) const { return {static_cast<std::uint8_t>((k + o.k) % 4)}; }
  Phase conj() const { return {static_cast<std::uint8_t>((4 - k) % 4)}; }
  bool real() const { return k % 2 == 0; }

  friend bool operator==(const Phase&, const Phase&) = default;
};

struct PauliOp {
  std::uint8_t lambda = 0;      // phase exponent, operator = i^lambda X(a) Z(b)
  std::vector<Bond> x_support;  // a, sorted, unique
  std::vector<Bond> z_support;  // b, sorted, unique

  static PauliOp identity() { return {}; }
  bool is_identity() const {
    return lambda == 0 && x_support.empty() && z_support.empty();
  }
  bool is_identity_up_to_phase() const {
    return x_support.empty() && z_support.empty();
  }

  Phase phase() const { return {lambda}; }

  // lambda == |a cap b| (mod 2), see the phase-discipline invariant.
  bool self_adjoint() const;

  friend bool operator==(const PauliOp&, const PauliOp&) = default;
};

// Normal-ordered product: i^{lp+lq} (-1)^{|b_P cap a_Q|} X(a_P xor a_Q) Z(b_P xor b_Q).
PauliOp multiply(const PauliOp& p, const PauliOp& q);

// Adjoint: i^{-lambda} (-1)^{|a cap b|} X(a) Z(b).
PauliOp adjoint(const PauliOp& p);

// Multiply by i^k.
PauliOp scale(Phase c, const PauliOp& p);

// Symplectic commutation test: PQ == QP.
bool commutes(const PauliOp& p, const PauliOp& q);

// String operators. A lattice path gives a Z-string, a dual path an
// X-string; both carry phase exponent 0 and are self-adjoint.
PauliOp string_from_path(const Path& xi);
PauliOp string_from_dual_path(const DualPath& xi);

// Stabilizer generators: X on a star, Z around a plaquette.
PauliOp star_op(const Vertex& s);
PauliOp plaquette_op(const Plaquette& p);

// Charges are the vertices with odd Z-degree, fluxes the plaquettes with
// odd X-overlap. Both sets are always of even size.
struct Syndrome {
  std::vector<Vertex> charges;      // sorted
  std::vector<Plaquette> fluxes;    // sorted

  bool trivial() const { return charges.empty() && fluxes.empty(); }
  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

Syndrome syndrome(const PauliOp& p);

// Symmetric difference of syndromes (syndrome of a product).
Syndrome syndrome_xor(const Syndrome& s, const Syndrome& t);

// Even degree at every vertex / even overlap with every plaquette.
bool is_cycle(const std::vector<Bond>& b);
bool is_dual_cycle(const std::vector<Bond>& a);

// Scanline parity fill: the unique finite plaquette (star) set whose
// boundary is the given cycle (dual cycle). Throws NotACycle otherwise.
struct NotACycle : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
std::vector<Plaquette> express_as_plaquette_sum(const std::vector<Bond>& b);
std::vector<Vertex> express_as_star_sum(const std::vector<Bond>& a);

// |bonds(loop) cap crossed(dual_loop)| mod 2. Both inputs must be closed.
int intersection_parity(const Path& loop, const DualPath& dual_loop);

// -A_s for every star fully in w, then -B_p for every plaquette fully in w.
struct HamiltonianTerm {
  int sign = -1;
  PauliOp op;
};
std::vector<HamiltonianTerm> local_hamiltonian_terms(const Window& w);

// Sorted-set helpers shared across modules.
std::vector<Bond> bond_xor(const std::vector<Bond>& u, const std::vector<Bond>& v);
std::size_t bond_intersection_size(const std::vector<Bond>& u, const std::vector<Bond>& v);

}  // namespace toric
