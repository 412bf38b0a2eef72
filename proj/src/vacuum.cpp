#include "toriclab/vacuum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric {

GaussianRational GaussianRational::from_phase(Phase p) {
  switch (p.k) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::string GaussianRational::str() const {
  std::ostringstream os;
  os << re.str();
  if (im != 0) os << (im > 0 ? "+" : "") << im.str() << "i";
  return os.str();
}

std::optional<Phase> omega_phase(const PauliOp& p) {
  if (!is_dual_cycle(p.x_support)) return std::nullopt;
  if (!is_cycle(p.z_support)) return std::nullopt;
  return Phase{p.lambda};
}

GaussianRational omega(const PauliOp& p) {
  const auto ph = omega_phase(p);
  return ph ? GaussianRational::from_phase(*ph) : GaussianRational::zero();
}

ExcitationVector ExcitationVector::operator+(const ExcitationVector& o) const {
  ExcitationVector r = *this;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  return r;
}

ExcitationVector ExcitationVector::scaled(const GaussianRational& c) const {
  ExcitationVector r = *this;
  for (auto& t : r.terms) t.coeff = t.coeff * c;
  return r;
}

GaussianRational inner(const ExcitationVector& u, const ExcitationVector& v) {
  GaussianRational acc;
  for (const auto& tu : u.terms) {
    const PauliOp ua = adjoint(tu.op);
    for (const auto& tv : v.terms) {
      const GaussianRational w = omega(multiply(ua, tv.op));
      if (w.is_zero()) continue;
      acc = acc + tu.coeff.conj() * tv.coeff * w;
    }
  }
  return acc;
}

Rat norm2(const ExcitationVector& u) { return inner(u, u).re; }

std::optional<Phase> states_equal(const PauliOp& p, const PauliOp& q) {
  // <P Omega, Q Omega> = omega(P^* Q); both vectors are unit vectors, so
  // the states coincide up to phase iff the pairing has modulus one.
  const auto z = omega_phase(multiply(adjoint(p), q));
  if (!z) return std::nullopt;
  return z->conj();
}

namespace {

struct GaussianInt {
  BigInt re = 0;
  BigInt im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianInt conj() const { return {re, -im}; }
  GaussianInt operator*(const GaussianInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
};

// Exact division in Z[i]; Bareiss guarantees divisibility.
GaussianInt exact_div(const GaussianInt& n, const GaussianInt& d) {
  const BigInt denom = d.re * d.re + d.im * d.im;
  const GaussianInt num = n * d.conj();
  return {num.re / denom, num.im / denom};
}

GaussianInt from_phase_int(Phase p) {
  switch (p.k) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

GramSummary gram(const std::vector<PauliOp>& ops) {
  const std::size_t n = ops.size();
  GramSummary out;
  out.matrix.assign(n, std::vector<GaussianRational>(n));

  std::vector<std::vector<GaussianInt>> m(n, std::vector<GaussianInt>(n));
  std::vector<PauliOp> adj(n);
  for (std::size_t j = 0; j < n; ++j) adj[j] = adjoint(ops[j]);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto ph = omega_phase(multiply(adj[j], ops[k]));
      if (ph) {
        out.matrix[j][k] = GaussianRational::from_phase(*ph);
        m[j][k] = from_phase_int(*ph);
      }
    }
  }

  // Fraction-free row echelon (Bareiss), scanning columns left to right;
  // pivot columns name a maximal independent subfamily of the vectors.
  GaussianInt prev{1, 0};
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t i = row + 1; i < n; ++i) {
      for (std::size_t k = col + 1; k < n; ++k)
        m[i][k] = exact_div(m[row][col] * m[i][k] - m[i][col] * m[row][k], prev);
      m[i][col] = {0, 0};
    }
    prev = m[row][col];
    out.basis_indices.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

bool lemma1_check(const PauliOp& x, const PauliOp& y) {
  const auto wx = omega_phase(x);
  if (!wx || !(*wx == Phase::one()))
    throw std::invalid_argument("lemma1_check: omega(X) != 1");
  if (!x.self_adjoint())
    throw std::invalid_argument("lemma1_check: X must be self-adjoint");
  const GaussianRational wy = omega(y);
  return omega(multiply(x, y)) == wy && omega(multiply(y, x)) == wy;
}

std::vector<PauliOp> enumerate_products(const std::vector<PauliOp>& generators,
                                        int max_factors) {
  std::vector<PauliOp> out{PauliOp::identity()};
  std::vector<std::pair<PauliOp, std::size_t>> frontier{{PauliOp::identity(), 0}};
  for (int depth = 0; depth < max_factors; ++depth) {
    std::vector<std::pair<PauliOp, std::size_t>> next;
    for (const auto& [op, from] : frontier) {
      for (std::size_t g = from; g < generators.size(); ++g) {
        PauliOp prod = multiply(op, generators[g]);
        out.push_back(prod);
        next.emplace_back(std::move(prod), g + 1);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

// Dynamic GF(2) vectors as uint64 words.
using Gf2 = std::vector<std::uint64_t>;

Gf2 zero_vec(std::size_t bits) { return Gf2((bits + 63) / 64, 0); }
void set_bit(Gf2& v, std::size_t i) { v[i / 64] ^= (std::uint64_t{1} << (i % 64)); }
void xor_into(Gf2& v, const Gf2& o) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= o[i];
}
bool is_zero_vec(const Gf2& v) {
  for (auto w : v)
    if (w) return false;
  return true;
}
int leading_bit(const Gf2& v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i]) {
      std::uint64_t w = v[i];
      int b = 63;
      while (!(w & (std::uint64_t{1} << b))) --b;
      return static_cast<int>(i) * 64 + b;
    }
  }
  return -1;
}

// Kernel basis of the sparse incidence system: columns indexed by the
// window bonds, rows by the touched sites. Standard column reduction
// with combination tracking.
template <typename SiteIndex>
std::vector<std::uint64_t> kernel_basis(const std::vector<Bond>& bonds,
                                        SiteIndex&& sites_of) {
  if (bonds.size() > 64)
    throw std::invalid_argument("pauli_class_count: window too large (more than 64 bonds)");

  using Site = std::decay_t<decltype(sites_of(bonds.front())[0])>;
  std::map<Site, std::size_t> site_index;
  std::vector<std::pair<Gf2, std::uint64_t>> echelon;  // (column, combination)
  std::vector<std::uint64_t> kernel;

  // First pass: give every touched site an index.
  for (const Bond& b : bonds)
    for (const auto& s : sites_of(b)) site_index.emplace(s, site_index.size());
  const std::size_t nsites = site_index.size();

  for (std::size_t j = 0; j < bonds.size(); ++j) {
    Gf2 col = zero_vec(nsites);
    for (const auto& s : sites_of(bonds[j])) set_bit(col, site_index.at(s));
    std::uint64_t comb = std::uint64_t{1} << j;
    for (const auto& [basis_col, basis_comb] : echelon) {
      const int lb = leading_bit(basis_col);
      if (lb >= 0 && (col[lb / 64] >> (lb % 64)) & 1) {
        xor_into(col, basis_col);
        comb ^= basis_comb;
      }
    }
    if (is_zero_vec(col))
      kernel.push_back(comb);
    else
      echelon.emplace_back(std::move(col), comb);
  }
  return kernel;
}

// Reduce the kernel to row-echelon form over the bond-mask bits, then
// canonicalize masks modulo the kernel span.
void echelonize_masks(std::vector<std::uint64_t>& basis) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v : basis) {
    for (std::uint64_t b : out) v = std::min(v, v ^ b);
    if (v) out.push_back(v);
    std::sort(out.rbegin(), out.rend());
  }
  basis = std::move(out);
}

std::uint64_t canonical_mask(std::uint64_t m, const std::vector<std::uint64_t>& basis) {
  for (std::uint64_t b : basis) m = std::min(m, m ^ b);
  return m;
}

}  // namespace

std::size_t pauli_class_count(const std::vector<PauliOp>& ops, const Window& w) {
  const std::vector<Bond> bonds = w.bonds();
  std::map<Bond, std::size_t> bond_index;
  for (std::size_t i = 0; i < bonds.size(); ++i) bond_index.emplace(bonds[i], i);

  const auto vertex_sites = [](const Bond& b) {
    return std::array<Vertex, 2>{b.from(), b.to()};
  };
  const auto plaquette_sites = [](const Bond& b) {
    if (b.o == Orient::East)
      return std::array<Plaquette, 2>{Plaquette{{b.base.x, b.base.y - 1}},
                                      Plaquette{{b.base.x, b.base.y}}};
    return std::array<Plaquette, 2>{Plaquette{{b.base.x - 1, b.base.y}},
                                    Plaquette{{b.base.x, b.base.y}}};
  };

  // Cycle space (Z-supports) and dual-cycle space (X-supports) of the
  // window bond set, as masks.
  std::vector<std::uint64_t> cycle_basis = kernel_basis(bonds, vertex_sites);
  std::vector<std::uint64_t> dual_basis = kernel_basis(bonds, plaquette_sites);
  echelonize_masks(cycle_basis);
  echelonize_masks(dual_basis);

  const auto mask_of = [&](const std::vector<Bond>& support) {
    std::uint64_t m = 0;
    for (const Bond& b : support) {
      const auto it = bond_index.find(b);
      if (it == bond_index.end())
        throw std::invalid_argument("pauli_class_count: support bond outside window");
      m |= std::uint64_t{1} << it->second;
    }
    return m;
  };

  std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;
  classes.reserve(ops.size());
  for (const PauliOp& p : ops)
    classes.emplace_back(canonical_mask(mask_of(p.x_support), dual_basis),
                         canonical_mask(mask_of(p.z_support), cycle_basis));
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes.size();
}

SpanCensus span_census(const Window& w, int max_factors) {
  // Generators follow the interior discipline: on these supports the
  // plane-cycle quotient and the window ground state's stabilizer
  // quotient coincide, which is what makes the census comparable to the
  // dense cyclic dimension.
  std::vector<PauliOp> generators;
  for (const Bond& b : interior_z_bonds(w)) {
    PauliOp z;
    z.z_support = {b};
    generators.push_back(std::move(z));
  }
  for (const Bond& b : interior_x_bonds(w)) {
    PauliOp x;
    x.x_support = {b};
    generators.push_back(std::move(x));
  }
  SpanCensus out;
  out.ops = enumerate_products(generators, max_factors);
  out.achieved_rank = pauli_class_count(out.ops, w);
  return out;
}

}  // namespace toric
