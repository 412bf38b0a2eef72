#include "toriclab/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "toriclab/rng.hpp"

namespace toric {

namespace {

constexpr double kStabilizerTol = 1e-9;

std::map<Bond, std::size_t> index_bonds(const std::vector<Bond>& bonds) {
  std::map<Bond, std::size_t> idx;
  for (std::size_t i = 0; i < bonds.size(); ++i) idx.emplace(bonds[i], i);
  return idx;
}

std::uint32_t mask_of(const std::vector<Bond>& support,
                      const std::map<Bond, std::size_t>& idx) {
  std::uint32_t m = 0;
  for (const Bond& b : support) {
    const auto it = idx.find(b);
    if (it == idx.end())
      throw std::invalid_argument("oracle: operator support outside the window");
    m |= std::uint32_t{1} << it->second;
  }
  return m;
}

std::complex<double> phase_factor(std::uint8_t lambda) {
  switch (lambda % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

std::complex<double> to_complex(const GaussianRational& g) {
  return {static_cast<double>(g.re), static_cast<double>(g.im)};
}

DenseState build_ground_state(const Window& w) {
  DenseState psi;
  psi.window = w;
  psi.bonds = w.bonds();
  const std::size_t n = psi.bonds.size();
  if (n > kMaxOracleBonds)
    throw std::invalid_argument("oracle window too large");
  const auto idx = index_bonds(psi.bonds);

  psi.amp.assign(std::size_t{1} << n, {0.0, 0.0});
  psi.amp[0] = {1.0, 0.0};  // all spins up

  // Project onto the +1 eigenspace of each interior star. (1 + A_s) maps
  // the amplitude pair (u, v) related by the star's bit flip to (u+v, u+v).
  const auto stars = stars_in_region(Region::all(), w);
  for (const Vertex& s : stars) {
    std::uint32_t xmask = 0;
    for (const Bond& b : star_bonds(s)) xmask |= std::uint32_t{1} << idx.at(b);
    for (std::uint32_t m = 0; m < psi.amp.size(); ++m) {
      const std::uint32_t mm = m ^ xmask;
      if (m < mm) {
        const auto sum = psi.amp[m] + psi.amp[mm];
        psi.amp[m] = sum;
        psi.amp[mm] = sum;
      }
    }
  }
  double norm2 = 0.0;
  for (const auto& a : psi.amp) norm2 += std::norm(a);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : psi.amp) a *= inv;

  for (const Vertex& s : stars) {
    const auto e = expectation(psi, star_op(s));
    if (std::abs(e - std::complex<double>{1.0, 0.0}) > kStabilizerTol)
      throw std::logic_error("ground state failed a star condition");
  }
  for (const Plaquette& p : plaquettes_in_region(Region::all(), w)) {
    const auto e = expectation(psi, plaquette_op(p));
    if (std::abs(e - std::complex<double>{1.0, 0.0}) > kStabilizerTol)
      throw std::logic_error("ground state failed a plaquette condition");
  }
  return psi;
}

DenseState apply_pauli(const DenseState& psi, const PauliOp& p) {
  const auto idx = index_bonds(psi.bonds);
  const std::uint32_t xmask = mask_of(p.x_support, idx);
  const std::uint32_t zmask = mask_of(p.z_support, idx);
  const std::complex<double> global = phase_factor(p.lambda);

  DenseState out;
  out.window = psi.window;
  out.bonds = psi.bonds;
  out.amp.assign(psi.amp.size(), {0.0, 0.0});
  for (std::uint32_t m = 0; m < psi.amp.size(); ++m) {
    const double sign = (std::popcount(m & zmask) % 2 == 0) ? 1.0 : -1.0;
    out.amp[m ^ xmask] = global * sign * psi.amp[m];
  }
  return out;
}

std::complex<double> expectation(const DenseState& psi, const PauliOp& p) {
  const DenseState pp = apply_pauli(psi, p);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t m = 0; m < psi.amp.size(); ++m)
    acc += std::conj(psi.amp[m]) * pp.amp[m];
  return acc;
}

CrossValidationReport cross_validate(const Window& w, std::size_t trials,
                                     std::uint64_t seed) {
  CrossValidationReport report;
  report.window = w;
  report.trials = trials;

  const DenseState psi = build_ground_state(w);
  const std::vector<Bond> zs = interior_z_bonds(w);
  const std::vector<Bond> xs = interior_x_bonds(w);
  Rng rng(seed);

  const auto pick = [&rng](const std::vector<Bond>& pool, std::size_t k) {
    std::vector<Bond> out;
    std::vector<std::size_t> indices(pool.size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + rng.below(indices.size() - i);
      std::swap(indices[i], indices[j]);
      out.push_back(pool[indices[i]]);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    PauliOp p;
    if (!xs.empty()) p.x_support = pick(xs, rng.below(std::min<std::size_t>(xs.size(), 8) + 1));
    if (!zs.empty()) p.z_support = pick(zs, rng.below(std::min<std::size_t>(zs.size(), 8) + 1));
    p.lambda = static_cast<std::uint8_t>(rng.below(4));

    const std::complex<double> dense = expectation(psi, p);
    const std::complex<double> symbolic = to_complex(omega(p));
    const double dev = std::abs(dense - symbolic);
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
    if (dev >= 1e-9)
      report.failures.push_back({p, dense, symbolic, dev});
  }
  return report;
}

std::size_t cyclic_dimension(const Window& w, const std::vector<PauliOp>& ops) {
  const DenseState psi = build_ground_state(w);
  const std::size_t dim = psi.amp.size();
  const std::size_t m = ops.size();
  if (m == 0) return 0;
  if (m * dim > (std::size_t{1} << 28))
    throw std::invalid_argument("cyclic_dimension: operator family too large for the window");

  std::vector<DenseState> vecs;
  vecs.reserve(m);
  for (const PauliOp& p : ops) vecs.push_back(apply_pauli(psi, p));

  Eigen::MatrixXcd gram(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j; k < m; ++k) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t q = 0; q < dim; ++q)
        acc += std::conj(vecs[j].amp[q]) * vecs[k].amp[q];
      gram(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = acc;
      gram(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = std::conj(acc);
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  // Eigenvalues of the Gram are squared singular values of the column map.
  constexpr double kSvdTol = 1e-8;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > kSvdTol * kSvdTol) ++rank;
  return rank;
}

}  // namespace toric
