#include "toriclab/split.hpp"

#include <sstream>

#include "toriclab/sampling.hpp"

namespace toric {

namespace {

bool supported_in_cone(const PauliOp& p, const Cone& c) {
  for (const Bond& b : p.x_support)
    if (!cone_contains_bond(c, b)) return false;
  for (const Bond& b : p.z_support)
    if (!cone_contains_bond(c, b)) return false;
  return true;
}

bool supported_in_complement(const PauliOp& p, const Cone& c) {
  for (const Bond& b : p.x_support)
    if (cone_contains_bond(c, b)) return false;
  for (const Bond& b : p.z_support)
    if (cone_contains_bond(c, b)) return false;
  return true;
}

bool sign_phase(Phase p) { return p == Phase::one() || p == Phase::minus_one(); }

std::string describe(const PauliOp& p) {
  std::ostringstream os;
  os << "i^" << static_cast<int>(p.lambda) << " |a|=" << p.x_support.size()
     << " |b|=" << p.z_support.size();
  return os.str();
}

}  // namespace

TensorLabel to_tensor_label(const CanonicalForm& f, const Scaffold& s) {
  if (!supported_in_cone(f.f1, s.inner))
    throw std::invalid_argument("tensor label: left factor leaves the inner cone");
  if (!supported_in_complement(f.f2, s.outer))
    throw std::invalid_argument("tensor label: middle factor leaves the outer complement");
  // The scaffold component must be the recorded subset product, exactly.
  PauliOp expect = PauliOp::identity();
  for (std::size_t i = 0; i < s.strings.size(); ++i)
    if (f.fhat_mask & (std::uint64_t{1} << i)) expect = multiply(expect, s.strings[i].op);
  if (!(expect == f.fhat))
    throw std::invalid_argument("tensor label: scaffold component is not the recorded subset product");

  TensorLabel t;
  t.phase = f.phase;
  t.left = f.f1;
  t.middle = f.f2;
  t.right = f.fhat;
  t.fhat_mask = f.fhat_mask;
  t.scaffold_fp = s.fingerprint();
  return t;
}

GaussianRational tensor_inner(const TensorLabel& a, const TensorLabel& b) {
  if (a.scaffold_fp != b.scaffold_fp)
    throw std::invalid_argument("tensor_inner: labels over different scaffolds");
  const GaussianRational ph =
      GaussianRational::from_phase(a.phase.conj()) * GaussianRational::from_phase(b.phase);
  return ph * omega(multiply(adjoint(a.left), b.left)) *
         omega(multiply(adjoint(a.middle), b.middle)) *
         omega(multiply(adjoint(a.right), b.right));
}

CheckReport verify_isometry(const Scaffold& s, const Window& sample_box,
                            std::size_t samples, std::uint64_t seed) {
  CheckReport report;
  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    ++report.total;
    const PauliOp p1 = random_string_product(rng, sample_box, 4, 12);
    const PauliOp p2 = random_string_product(rng, sample_box, 4, 12);
    const TensorLabel l1 = to_tensor_label(canonicalize(p1, s), s);
    const TensorLabel l2 = to_tensor_label(canonicalize(p2, s), s);

    const GaussianRational lhs = omega(multiply(adjoint(p1), p2));
    const GaussianRational rhs = tensor_inner(l1, l2);
    const bool norms_ok = tensor_inner(l1, l1) == GaussianRational::one() &&
                          tensor_inner(l2, l2) == GaussianRational::one();
    if (!(lhs == rhs) || !norms_ok) {
      report.fail("sample " + std::to_string(k) + ": <eta1,eta2>=" + lhs.str() +
                  " vs U-pairing " + rhs.str() + " (" + describe(p1) + " ; " +
                  describe(p2) + ")");
    }
  }
  return report;
}

bool verify_factorization(const PauliOp& f1, const PauliOp& f2, const Cone& c1,
                          const Cone& c2) {
  if (!supported_in_cone(f1, c1))
    throw std::invalid_argument("verify_factorization: first factor leaves the inner cone");
  if (!supported_in_complement(f2, c2))
    throw std::invalid_argument("verify_factorization: second factor leaves the outer complement");
  return omega(multiply(f1, f2)) == omega(f1) * omega(f2);
}

CheckReport factorization_census(const Cone& c1, const Cone& c2, const Window& w) {
  std::vector<PauliOp> inner_ops, outer_ops;

  const auto classify = [&](const PauliOp& op) {
    if (supported_in_cone(op, c1)) inner_ops.push_back(op);
    if (supported_in_complement(op, c2)) outer_ops.push_back(op);
  };
  for (coord_t x1 = w.xmin; x1 <= w.xmax; ++x1)
    for (coord_t x2 = x1 + 1; x2 <= w.xmax; ++x2)
      for (coord_t y1 = w.ymin; y1 <= w.ymax; ++y1)
        for (coord_t y2 = y1 + 1; y2 <= w.ymax; ++y2)
          classify(string_from_path(rectangle_loop(x1, x2, y1, y2)));
  for (coord_t x1 = w.xmin; x1 < w.xmax; ++x1)
    for (coord_t x2 = x1 + 1; x2 < w.xmax; ++x2)
      for (coord_t y1 = w.ymin; y1 < w.ymax; ++y1)
        for (coord_t y2 = y1 + 1; y2 < w.ymax; ++y2)
          classify(string_from_dual_path(rectangle_dual_loop(x1, x2, y1, y2)));

  CheckReport report;
  for (const PauliOp& a : inner_ops) {
    for (const PauliOp& b : outer_ops) {
      ++report.total;
      if (!verify_factorization(a, b, c1, c2))
        report.fail("loop pair " + describe(a) + " ; " + describe(b));
    }
  }
  return report;
}

namespace {

bool conjugation_core(const PauliOp& op, bool left_slot, const TensorLabel& t,
                      const Scaffold& s) {
  const PauliOp v = t.preimage();
  const CanonicalForm form2 = canonicalize(multiply(op, v), s);
  const TensorLabel t2 = to_tensor_label(form2, s);

  if (t2.fhat_mask != t.fhat_mask) return false;

  // Slot-by-slot phases: untouched slots must match up to sign only.
  const auto c_left = left_slot ? states_equal(multiply(op, t.left), t2.left)
                                : states_equal(t.left, t2.left);
  const auto c_mid = left_slot ? states_equal(t.middle, t2.middle)
                               : states_equal(multiply(op, t.middle), t2.middle);
  const auto c_right = states_equal(t.right, t2.right);
  if (!c_left || !c_mid || !c_right) return false;
  if (left_slot) {
    if (!sign_phase(*c_mid)) return false;
  } else {
    if (!sign_phase(*c_left)) return false;
  }
  if (!sign_phase(*c_right)) return false;

  // Global phase bookkeeping must close exactly.
  return t2.phase == t.phase * (*c_left) * (*c_mid) * (*c_right);
}

}  // namespace

bool conjugation_check(const PauliOp& a, const TensorLabel& t, const Scaffold& s) {
  if (!supported_in_cone(a, s.inner))
    throw std::invalid_argument("conjugation_check: operator not supported in the inner cone");
  return conjugation_core(a, true, t, s);
}

bool mirror_conjugation_check(const PauliOp& b, const TensorLabel& t, const Scaffold& s) {
  if (!supported_in_complement(b, s.outer))
    throw std::invalid_argument(
        "mirror_conjugation_check: operator not supported in the outer complement");
  return conjugation_core(b, false, t, s);
}

}  // namespace toric
