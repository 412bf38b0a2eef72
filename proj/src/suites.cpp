#include "toriclab/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "toriclab/canonical.hpp"
#include "toriclab/oracle.hpp"
#include "toriclab/raster.hpp"
#include "toriclab/sampling.hpp"
#include "toriclab/split.hpp"

namespace toric {

namespace {

struct Tally {
  std::size_t failures = 0;
  std::string first;

  void fail(const std::string& what) {
    if (failures == 0) first = what;
    ++failures;
  }
  void absorb(const CheckReport& r) {
    if (!r.passed() && failures == 0) first = r.first_failure;
    failures += r.failures;
  }
};

void finish(SuiteResult& res, const Tally& t) {
  res.status = t.failures == 0 ? "pass" : "fail";
  res.first_failure = t.first;
  res.counters["failures"] = t.failures;
}

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

// All index combinations of size <= max_k, in lexicographic order.
void for_each_combination(std::size_t n, int max_k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx;
  const std::function<void(std::size_t)> rec = [&](std::size_t from) {
    fn(idx);
    if (static_cast<int>(idx.size()) == max_k) return;
    for (std::size_t i = from; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

SuiteResult geometry_suite(const Config& cfg) {
  SuiteResult res;
  res.name = "geometry";
  Tally tally;

  // Distal separation of the configured pair.
  const DistalResult pair = is_distally_separated(cfg.lambda1, cfg.lambda2, cfg.window);
  res.counters["distal_pair_verdict"] =
      pair.separated() ? "separated"
                       : (pair.verdict == DistalResult::Verdict::NotSeparated
                              ? "not-separated"
                              : "undetermined");
  if (!pair.separated()) tally.fail("configured cone pair not separated: " + pair.note);

  // A cone against itself must fail with a verifiable witness.
  const DistalResult self = is_distally_separated(cfg.lambda1, cfg.lambda1, cfg.window);
  bool self_ok = self.verdict == DistalResult::Verdict::NotSeparated && self.witness;
  if (self_ok) {
    const auto bonds = self.witness->is_star
                           ? star_bonds(self.witness->at)
                           : plaquette_bonds(Plaquette{self.witness->at});
    bool has_in = false, has_out = false;
    for (const Bond& b : bonds) {
      (cone_contains_bond(cfg.lambda1, b) ? has_in : has_out) = true;
    }
    self_ok = has_in && has_out;
  }
  res.counters["self_pair_witness"] = self_ok;
  if (!self_ok) tally.fail("identical cone pair did not produce a straddling witness");

  // Membership census against the sampling reference, three cone shapes.
  const Window census = Window::make(-6, 6, -6, 6);
  const std::vector<Cone> shapes = {cfg.lambda, cfg.lambda1,
                                    Cone::make({1, -1}, {2, -1}, {-1, 2})};
  std::size_t census_bonds = 0, census_mismatches = 0;
  for (const Cone& c : shapes) {
    for (const Bond& b : census.bonds()) {
      ++census_bonds;
      if (cone_contains_bond(c, b) != cone_contains_bond_sampled(c, b)) {
        ++census_mismatches;
        if (census_mismatches == 1)
          tally.fail("cone membership census mismatch at a bond");
      }
    }
  }
  tally.failures += census_mismatches > 0 ? census_mismatches - 1 : 0;
  res.counters["census_bonds"] = census_bonds;
  res.counters["census_mismatches"] = census_mismatches;

  // Closed loop / closed dual loop even-intersection theorem.
  Rng rng(cfg.seed);
  std::size_t parity_failures = 0;
  for (std::size_t i = 0; i < cfg.trials.parity; ++i) {
    const Path loop = random_rectangle_loop(rng, cfg.window);
    const DualPath dual = random_rectangle_dual_loop(rng, cfg.window);
    if (intersection_parity(loop, dual) != 0) {
      ++parity_failures;
      tally.fail("odd loop/dual-loop intersection at parity trial " + std::to_string(i));
    }
  }
  res.counters["parity_pairs"] = cfg.trials.parity;
  res.counters["parity_failures"] = parity_failures;

  finish(res, tally);
  return res;
}

SuiteResult omega_oracle_suite(const Config& cfg) {
  SuiteResult res;
  res.name = "omega-oracle";
  Tally tally;

  const CrossValidationReport xv =
      cross_validate(cfg.oracle_window, cfg.trials.omega_oracle, cfg.seed);
  res.counters["trials"] = xv.trials;
  {
    std::ostringstream dev;
    dev << xv.max_abs_deviation;
    res.counters["max_abs_deviation"] = dev.str();
  }
  res.counters["cross_failures"] = xv.failures.size();
  if (!xv.passed())
    tally.fail("omega / dense-oracle disagreement, deviation " +
               std::to_string(xv.failures.front().deviation));

  // Stabilizer eigenvector conditions and the ground energy.
  const DenseState psi = build_ground_state(cfg.oracle_window);
  const auto terms = local_hamiltonian_terms(cfg.oracle_window);
  double energy = 0.0;
  std::size_t stars = 0, plaqs = 0;
  for (const auto& term : terms) {
    const auto e = expectation(psi, term.op);
    if (std::abs(e - std::complex<double>{1.0, 0.0}) > 1e-9)
      tally.fail("stabilizer condition violated in the oracle window");
    energy += term.sign * e.real();
    (term.op.z_support.empty() ? stars : plaqs) += 1;
  }
  const double expected_energy = -static_cast<double>(terms.size());
  if (std::abs(energy - expected_energy) > 1e-8)
    tally.fail("ground energy off the term-count floor");
  res.counters["interior_stars"] = stars;
  res.counters["interior_plaquettes"] = plaqs;
  res.counters["energy"] = energy;
  res.counters["expected_energy"] = expected_energy;

  // Span density shadow: symbolic achieved rank vs numerical cyclic dim.
  const SpanCensus census = span_census(cfg.census_window, cfg.trials.span_max_factors);
  const std::size_t ambient = cyclic_dimension(cfg.census_window, census.ops);
  res.counters["span_ops"] = census.ops.size();
  res.counters["achieved_rank"] = census.achieved_rank;
  res.counters["ambient_dim"] = ambient;
  if (census.achieved_rank != ambient)
    tally.fail("span census rank " + std::to_string(census.achieved_rank) +
               " != oracle cyclic dimension " + std::to_string(ambient));

  finish(res, tally);
  return res;
}

SuiteResult canonical_suite(const Config& cfg) {
  SuiteResult res;
  res.name = "canonical";
  Tally tally;

  const Scaffold scaffold = build_scaffold(cfg.lambda1, cfg.lambda2, cfg.window);
  const Scaffold alternate =
      build_scaffold(cfg.lambda1, cfg.lambda2, cfg.window, NeighborOrder::Reversed);

  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.trials.canonical; ++i) {
    const PauliOp p = random_string_product(rng, cfg.sample_box, 4, 12);
    try {
      const CanonicalForm form = canonicalize(p, scaffold);
      const auto cert = states_equal(p, form.product());
      if (!cert || !(*cert == Phase::one())) {
        tally.fail("canonical round-trip certificate failed at trial " + std::to_string(i));
        continue;
      }
      (void)to_tensor_label(form, scaffold);  // membership checks

      const CanonicalForm other = canonicalize(p, alternate);
      const auto cert2 = states_equal(p, other.product());
      if (!cert2 || !(*cert2 == Phase::one())) {
        tally.fail("alternate-scaffold round trip failed at trial " + std::to_string(i));
        continue;
      }
      if (!canonical_uniqueness_check(scaffold, form, alternate, other))
        tally.fail("scaffold components disagree beyond sign at trial " + std::to_string(i));
    } catch (const std::exception& e) {
      tally.fail("trial " + std::to_string(i) + ": " + e.what());
    }
  }
  res.counters["trials"] = cfg.trials.canonical;
  res.counters["scaffold_strings"] = scaffold.strings.size();

  finish(res, tally);
  return res;
}

SuiteResult classify_suite(const Config& cfg) {
  SuiteResult res;
  res.name = "classify";
  Tally tally;

  const Cone& cone = cfg.lambda;
  const Window& w = cfg.classify_window;
  const Window pool_box = Window::make(w.xmin + 2, w.xmax - 2, w.ymin + 2, w.ymax - 2);

  std::vector<PauliOp> pool;
  for (const Bond& b : pool_box.bonds()) {
    if (cone_contains_bond(cone, b)) continue;
    PauliOp z;
    z.z_support = {b};
    PauliOp x;
    x.x_support = {b};
    pool.push_back(std::move(z));
    pool.push_back(std::move(x));
  }

  std::size_t ops = 0, witnesses = 0, representatives = 0;
  for_each_combination(
      pool.size(), cfg.trials.classify_max_constituents,
      [&](const std::vector<std::size_t>& idx) {
        PauliOp p = PauliOp::identity();
        for (std::size_t i : idx) p = multiply(p, pool[i]);
        ++ops;
        try {
          const ClassifyOutcome out = classify_excitation(p, cone, w);
          if (out.kind == ClassifyOutcome::Kind::Witness) {
            ++witnesses;
            if (!op_in_complement(out.stabilizer, cone))
              tally.fail("witness stabilizer leaves the complement");
            else if (commutes(out.stabilizer, p))
              tally.fail("witness stabilizer does not anticommute");
          } else {
            ++representatives;
            if (!op_in_cone(out.representative, cone)) {
              tally.fail("representative leaves the cone");
            } else {
              const auto se = states_equal(p, out.representative);
              if (!se || !(*se == out.phase))
                tally.fail("representative state certificate failed");
            }
          }
        } catch (const std::exception& e) {
          tally.fail(std::string("classification threw: ") + e.what());
        }
      });

  res.counters["string_pool"] = pool.size();
  res.counters["products_checked"] = ops;
  res.counters["witness_branch"] = witnesses;
  res.counters["representative_branch"] = representatives;

  finish(res, tally);
  return res;
}

SuiteResult dense_decompose_suite(const Config& cfg) {
  SuiteResult res;
  res.name = "dense-decompose";
  Tally tally;

  const Cone& cone = cfg.lambda;
  // Margin around the pool so edge syndromes can route both inside the
  // cone and around the apex through the complement.
  const Window w = Window::make(cfg.classify_window.xmin - 3, cfg.classify_window.xmax + 3,
                                cfg.classify_window.ymin - 3, cfg.classify_window.ymax + 3);

  // Single-bond strings on cone bonds near the apex.
  std::vector<PauliOp> pool;
  const Window pool_box = Window::make(0, 3, 0, 3);
  for (const Bond& b : pool_box.bonds()) {
    if (!cone_contains_bond(cone, b)) continue;
    PauliOp z;
    z.z_support = {b};
    PauliOp x;
    x.x_support = {b};
    pool.push_back(std::move(z));
    pool.push_back(std::move(x));
  }

  std::vector<PauliOp> family;
  for_each_combination(pool.size(), cfg.trials.decompose_max_constituents,
                       [&](const std::vector<std::size_t>& idx) {
                         PauliOp p = PauliOp::identity();
                         for (std::size_t i : idx) p = multiply(p, pool[i]);
                         family.push_back(std::move(p));
                       });

  // Boundary strips with every excitation on the cone edge: the branch
  // with no anticommuting in-cone stabilizer.
  for (coord_t x1 = 1; x1 <= 3; ++x1) {
    for (coord_t x2 = x1 + 1; x2 <= 3; ++x2) {
      Path strip;
      strip.vertices.push_back({x1, 0});
      for (coord_t x = x1; x <= x2; ++x) strip.vertices.push_back({x, 1});
      strip.vertices.push_back({x2, 0});
      family.push_back(string_from_path(strip));

      DualPath dual;
      dual.plaquettes.push_back({{x1, 0}});
      for (coord_t x = x1; x <= x2; ++x) dual.plaquettes.push_back({{x, 1}});
      dual.plaquettes.push_back({{x2, 0}});
      family.push_back(string_from_dual_path(dual));
    }
  }

  const std::vector<GaussianRational> lambdas = {
      GaussianRational::one(), {0, 1}, {1, 1}};
  std::size_t checks = 0;
  for (const PauliOp& p : family) {
    for (const GaussianRational& lambda : lambdas) {
      ++checks;
      try {
        const DenseDecomposition d = dense_decompose(lambda, p, cone, w);
        if (!dense_decomposition_certificate(d, lambda, p)) {
          tally.fail("decomposition certificate failed");
          continue;
        }
        for (const auto& term : d.a_side.terms) {
          if (!term.op.self_adjoint() || term.coeff.im != 0 || !op_in_cone(term.op, cone))
            tally.fail("cone-side term not a real self-adjoint cone operator");
        }
        for (const auto& term : d.b_side.terms) {
          if (!term.op.self_adjoint() || term.coeff.im != 0 ||
              !op_in_complement(term.op, cone))
            tally.fail("complement-side term not a real self-adjoint complement operator");
        }
      } catch (const std::exception& e) {
        tally.fail(std::string("decomposition threw: ") + e.what());
      }
    }
  }
  res.counters["family_size"] = family.size();
  res.counters["checks"] = checks;

  finish(res, tally);
  return res;
}

SuiteResult split_suite(const Config& cfg) {
  SuiteResult res;
  res.name = "split";
  Tally tally;

  const Scaffold scaffold = build_scaffold(cfg.lambda1, cfg.lambda2, cfg.window);

  const CheckReport iso =
      verify_isometry(scaffold, cfg.sample_box, cfg.trials.isometry, cfg.seed + 1);
  res.counters["isometry_samples"] = iso.total;
  res.counters["isometry_failures"] = iso.failures;
  tally.absorb(iso);

  const CheckReport fact =
      factorization_census(cfg.lambda1, cfg.lambda2, cfg.factorization_window);
  res.counters["factorization_pairs"] = fact.total;
  res.counters["factorization_failures"] = fact.failures;
  tally.absorb(fact);
  if (fact.total == 0) tally.fail("factorization census found no loop pairs");

  Rng rng(cfg.seed + 2);
  const Region inner = Region::cone(cfg.lambda1);
  const Region outer_c = Region::complement(cfg.lambda2);
  std::size_t conj_fail = 0, mirror_fail = 0;
  for (std::size_t i = 0; i < cfg.trials.conjugation; ++i) {
    const PauliOp target = random_string_product(rng, cfg.sample_box, 3, 8);
    const TensorLabel t = to_tensor_label(canonicalize(target, scaffold), scaffold);

    const PauliOp a = random_region_string_product(rng, inner, cfg.sample_box, 3, 8);
    if (!conjugation_check(a, t, scaffold)) {
      ++conj_fail;
      tally.fail("conjugation certificate failed at trial " + std::to_string(i));
    }
    const PauliOp b = random_region_string_product(rng, outer_c, cfg.sample_box, 3, 8);
    if (!mirror_conjugation_check(b, t, scaffold)) {
      ++mirror_fail;
      tally.fail("mirror conjugation certificate failed at trial " + std::to_string(i));
    }
  }
  res.counters["conjugation_trials"] = cfg.trials.conjugation;
  res.counters["conjugation_failures"] = conj_fail;
  res.counters["mirror_trials"] = cfg.trials.conjugation;
  res.counters["mirror_failures"] = mirror_fail;

  finish(res, tally);
  return res;
}

SuiteResult h0_suite(const Config& cfg) {
  SuiteResult res;
  res.name = "h0";
  Tally tally;

  const Scaffold scaffold = build_scaffold(cfg.lambda1, cfg.lambda2, cfg.window);
  const auto elements = f0_group_elements(scaffold, 4096);
  const std::size_t dim = gram(elements).rank;

  // Independent route: states coincide exactly when syndromes do, so the
  // dimension is the number of distinct subset-product syndromes.
  std::map<std::pair<std::vector<Vertex>, std::vector<Plaquette>>, int> classes;
  for (const PauliOp& p : elements) {
    const Syndrome s = syndrome(p);
    classes[{s.charges, s.fluxes}] += 1;
  }

  res.counters["scaffold_strings"] = scaffold.strings.size();
  res.counters["f0_size"] = elements.size();
  res.counters["dimension"] = dim;
  res.counters["syndrome_classes"] = classes.size();
  res.counters["interior_vertices"] = scaffold.interior_vertices.size();
  res.counters["interior_plaquettes"] = scaffold.interior_plaquettes.size();

  if (dim != classes.size())
    tally.fail("gram rank disagrees with the syndrome class count");
  const bool no_interior =
      scaffold.interior_vertices.empty() && scaffold.interior_plaquettes.empty();
  if (no_interior && dim != 4)
    tally.fail("expected dimension 4 for a gap with no interior sites, got " +
               std::to_string(dim));

  finish(res, tally);
  return res;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult res;
  try {
    if (name == "geometry") {
      res = geometry_suite(cfg);
    } else if (name == "omega-oracle") {
      res = omega_oracle_suite(cfg);
    } else if (name == "canonical") {
      res = canonical_suite(cfg);
    } else if (name == "classify") {
      res = classify_suite(cfg);
    } else if (name == "dense-decompose") {
      res = dense_decompose_suite(cfg);
    } else if (name == "split") {
      res = split_suite(cfg);
    } else if (name == "h0") {
      res = h0_suite(cfg);
    } else {
      throw std::invalid_argument("unknown suite: " + name);
    }
  } catch (const std::exception& e) {
    res.name = name;
    res.status = "fail";
    res.first_failure = std::string("suite aborted: ") + e.what();
  }
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<SuiteResult> run_suites(const Config& cfg) {
  std::vector<SuiteResult> out;
  for (const std::string& name : cfg.suites) out.push_back(run_suite(name, cfg));
  return out;
}

json report_json(const Config& cfg, const std::vector<SuiteResult>& results) {
  json suites = json::array();
  bool all_pass = true;
  for (const SuiteResult& r : results) {
    json entry = {{"name", r.name}, {"status", r.status}, {"counters", r.counters}};
    entry["first_failure"] = r.first_failure.empty() ? json() : json(r.first_failure);
    suites.push_back(std::move(entry));
    all_pass = all_pass && r.passed();
  }
  return {{"tool", "toriclab"},
          {"config", cfg.to_json()},
          {"suites", suites},
          {"overall", all_pass ? "pass" : "fail"}};
}

int overall_exit_code(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results)
    if (!r.passed()) return 1;
  return 0;
}

}  // namespace toric
