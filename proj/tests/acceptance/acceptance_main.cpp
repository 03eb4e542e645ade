// Acceptance suite: nine criteria, one pass/fail line each. Exit status 0
// only when every selected criterion passes. Criterion 9 drives the CLI
// binary, whose path is given with --cli.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "th/density.hpp"
#include "th/sampling.hpp"
#include "th_cli/json_io.hpp"
#include "th_cli/sweep.hpp"

using th::DiscreteMeasure;
using th::GroupElement;
using th::GroupSpec;
using th::Int;
using th::PointSet;
using th::QuotientMap;
using th::Signal;
using th::Subgroup;

namespace {

struct Criterion {
  bool pass = false;
  std::string detail;
};

struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  Int uniform(Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(eng);
  }
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng);
  }
  GroupElement element(const GroupSpec& spec) {
    std::vector<Int> c(spec.rank());
    for (std::size_t j = 0; j < spec.rank(); ++j) {
      c[j] = uniform(0, spec.invariant_factors()[j] - 1);
    }
    return GroupElement{std::move(c)};
  }
  GroupSpec group(Int max_rank, Int max_order) {
    const Int r = uniform(1, max_rank);
    std::vector<Int> factors;
    Int budget = max_order;
    for (Int i = 0; i < r; ++i) {
      const Int f = uniform(1, std::max<Int>(1, budget));
      factors.push_back(f);
      budget /= std::max<Int>(1, f);
    }
    return GroupSpec(factors);
  }
  Subgroup subgroup(const GroupSpec& spec, Int max_gens = 3) {
    std::vector<GroupElement> gens;
    const Int count = uniform(0, max_gens);
    for (Int i = 0; i < count; ++i) gens.push_back(element(spec));
    return Subgroup::from_generators(spec, gens);
  }
  std::mt19937_64 eng;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ---- 1. exhaustive cyclic equivalence -------------------------------------

Criterion criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  th::sweep::SweepConfig cfg;
  cfg.family = th::sweep::SweepConfig::Family::cyclic;
  cfg.min_n = 1;
  cfg.max_n = 20;
  cfg.subgroups_all = true;
  cfg.supports = th::sweep::SweepConfig::Supports::exhaustive;
  cfg.max_support = 3;
  cfg.unit_weights = true;
  const auto outcome = th::sweep::run_equivalence_sweep(cfg);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool pass =
      outcome.disagreements == 0 && outcome.instances > 0 && seconds <= 300.0;
  return {pass, std::to_string(outcome.instances) + " instances, " +
                    std::to_string(outcome.disagreements) +
                    " disagreements, " + fmt(seconds) + " s"};
}

// ---- 2. randomized product-group equivalence ------------------------------

Criterion criterion_2() {
  th::sweep::SweepConfig cfg;
  cfg.family = th::sweep::SweepConfig::Family::random_products;
  cfg.max_order = 10'000;
  cfg.max_rank = 3;
  cfg.subgroups_all = false;
  cfg.supports = th::sweep::SweepConfig::Supports::random;
  cfg.max_support = 8;
  cfg.instances = 10'000;
  cfg.unit_weights = false;
  cfg.seed = 20250809;
  const auto outcome = th::sweep::run_equivalence_sweep(cfg);
  const bool pass = outcome.disagreements == 0 && outcome.instances == 10'000;
  return {pass, std::to_string(outcome.instances) + " instances, " +
                    std::to_string(outcome.disagreements) + " disagreements"};
}

// ---- 3. alpha-independence of density -------------------------------------

Criterion criterion_3() {
  Rng rng(0xa1fa'2025);
  const std::array<double, 4> alphas{1.0, 1.5, 2.0, 3.0};
  int dense_count = 0, sparse_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // even trials: support on distinct cosets (dense); odd trials: force a
    // coset collision, which needs a nontrivial annihilator
    GroupSpec spec = rng.group(2, 120);
    Subgroup h = rng.subgroup(spec);
    QuotientMap q = th::quotient(th::annihilator(h));
    const bool force_dense = trial % 2 == 0;
    while (!force_dense && q.lambda().order() < 2) {
      spec = rng.group(2, 120);
      h = rng.subgroup(spec);
      q = th::quotient(th::annihilator(h));
    }
    const auto reps = q.representatives();
    const auto lam = q.lambda().elements();
    auto coset_member = [&](const GroupElement& rep) {
      return spec.add(rep, lam[static_cast<std::size_t>(rng.uniform(
                               0, static_cast<Int>(lam.size()) - 1))]);
    };

    std::set<GroupElement> pts;
    if (force_dense) {
      const Int size = rng.uniform(1, std::min<Int>(4, q.index()));
      while (static_cast<Int>(pts.size()) < size) {
        pts.insert(coset_member(reps[static_cast<std::size_t>(rng.uniform(
            0, static_cast<Int>(reps.size()) - 1))]));
      }
    } else {
      const GroupElement rep = reps[static_cast<std::size_t>(
          rng.uniform(0, static_cast<Int>(reps.size()) - 1))];
      while (pts.size() < 2) pts.insert(coset_member(rep));
      const Int extra = rng.uniform(0, 2);
      for (Int i = 0; i < extra; ++i) pts.insert(rng.element(spec));
    }
    std::vector<std::pair<GroupElement, double>> atoms;
    for (const auto& p : pts) atoms.emplace_back(p, rng.real(0.1, 10.0));
    const auto m = DiscreteMeasure::nonnegative(spec, atoms);

    const bool dense = th::is_dense_coset(m, q).dense;
    (dense ? dense_count : sparse_count) += 1;

    // spanning family: the indicator of each support point
    bool all_small = true;
    double worst_alpha2 = 0.0;
    for (double alpha : alphas) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<std::complex<double>> f(m.size(), 0.0);
        f[i] = 1.0;
        const double err = th::best_approximation_error(m, h, f, alpha).error;
        all_small = all_small && err <= 1e-8;
        if (alpha == 2.0) worst_alpha2 = std::max(worst_alpha2, err);
      }
    }
    if (all_small != dense) {
      return {false, "alpha sweep disagrees with the verdict at trial " +
                         std::to_string(trial)};
    }
    if (!dense && worst_alpha2 < 1e-3) {
      return {false, "non-dense instance below the 1e-3 floor at trial " +
                         std::to_string(trial)};
    }
  }
  return {true, "200 instances (" + std::to_string(dense_count) + " dense, " +
                    std::to_string(sparse_count) + " non-dense), all alphas"};
}

// ---- 4. merge lemma -------------------------------------------------------

Criterion criterion_4() {
  Rng rng(0x3344'2025);
  for (int trial = 0; trial < 1000; ++trial) {
    const GroupSpec spec = rng.group(3, 10'000);
    const Subgroup lam = rng.subgroup(spec, 2);
    const QuotientMap q = th::quotient(lam);
    const auto lam_elems = lam.elements();
    const auto reps = q.representatives();

    std::vector<GroupElement> r_pts, s_pts;
    for (const GroupElement& rep : reps) {
      auto shift = [&] {
        return lam_elems[static_cast<std::size_t>(
            rng.uniform(0, static_cast<Int>(lam_elems.size()) - 1))];
      };
      r_pts.push_back(spec.add(rep, shift()));
      if (rng.uniform(0, 1) == 0) s_pts.push_back(spec.add(rep, shift()));
    }
    const PointSet r = PointSet::of(spec, r_pts);
    const PointSet s = PointSet::of(spec, s_pts);
    if (!th::is_partial_transversal(q, s) || !th::is_transversal(q, r)) {
      return {false, "generator broke a precondition at trial " +
                         std::to_string(trial)};
    }
    const PointSet merged = th::merge_transversal(q, s, r);
    if (!th::is_transversal(q, merged)) {
      return {false, "merge failed at trial " + std::to_string(trial)};
    }
  }
  return {true, "1000 precondition-satisfying pairs, all merges transversal"};
}

// ---- 5. finite annihilation lemma -----------------------------------------

Criterion criterion_5() {
  Int checked = 0;
  for (const GroupSpec& spec : {th::make_group({12}), th::make_group({4, 6})}) {
    const auto all = th::enumerate_elements(spec);
    const auto n = all.size();
    for (const Subgroup& h : th::all_subgroups(spec)) {
      const QuotientMap q = th::quotient(th::annihilator(h));
      // all supports of size 1..4 via an index odometer
      for (std::size_t size = 1; size <= 4; ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        if (size > n) break;
        for (;;) {
          std::vector<GroupElement> pts;
          for (std::size_t i : idx) pts.push_back(all[i]);
          const PointSet support = PointSet::of(spec, pts);
          const auto res = th::annihilating_null_space(support, h, q);
          const bool partial = th::is_partial_transversal(q, support);
          ++checked;
          if (partial && res.dimension != 0) {
            return {false, "nontrivial null space on a partial transversal"};
          }
          if (!partial && res.dimension < 1) {
            return {false, "missing null space on a colliding support"};
          }
          if (res.support_is_partial_transversal != partial) {
            return {false, "partial-transversal flag disagrees"};
          }
          // rank-nullity against the rank oracle
          std::vector<std::pair<GroupElement, double>> atoms;
          for (const auto& p : pts) atoms.emplace_back(p, 1.0);
          const auto v = th::is_dense_rank(
              DiscreteMeasure::nonnegative(spec, atoms), h);
          if (res.dimension != v.support_size - v.rank) {
            return {false, "rank-nullity violated"};
          }

          std::size_t pos = size;
          while (pos-- > 0 && idx[pos] == n - (size - pos)) {
          }
          if (pos == static_cast<std::size_t>(-1)) break;
          ++idx[pos];
          for (std::size_t i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
      }
    }
  }
  return {true, std::to_string(checked) + " supports across Z_12 and Z_4xZ_6"};
}

// ---- 6. double annihilator ------------------------------------------------

Criterion criterion_6() {
  Int checked = 0;
  std::vector<GroupSpec> specs;
  for (Int n = 1; n <= 30; ++n) specs.push_back(th::make_group({n}));
  specs.push_back(th::make_group({4, 6}));
  for (const GroupSpec& spec : specs) {
    for (const Subgroup& h : th::all_subgroups(spec)) {
      const Subgroup lam = th::annihilator(h);
      ++checked;
      if (!(th::annihilator(lam) == h)) {
        return {false, "double annihilator moved a subgroup"};
      }
      if (lam.order() * h.order() != spec.order()) {
        return {false, "order product violated"};
      }
    }
  }
  return {true, std::to_string(checked) + " subgroups, all fixed"};
}

// ---- 7. sampling round trips ----------------------------------------------

Criterion criterion_7() {
  Rng rng(0x5a3b'2025);
  double worst_roundtrip = 0.0, worst_kernel = 0.0;
  int rejected = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const GroupSpec spec = rng.group(3, 4096);
    Subgroup h = rng.subgroup(spec);
    for (int tries = 0; h.order() > 512 && tries < 8; ++tries) {
      h = rng.subgroup(spec);
    }
    if (h.order() > 512) h = Subgroup::trivial(spec);
    const QuotientMap q = th::quotient(th::annihilator(h));
    const auto lam = q.lambda().elements();
    const auto reps = q.representatives();

    std::vector<GroupElement> d_pts;
    std::vector<std::pair<GroupElement, std::complex<double>>> coeffs;
    for (const GroupElement& rep : reps) {
      if (rng.uniform(0, 1) == 0) continue;
      const GroupElement delta = spec.add(
          rep, lam[static_cast<std::size_t>(
                   rng.uniform(0, static_cast<Int>(lam.size()) - 1))]);
      d_pts.push_back(delta);
      coeffs.emplace_back(delta, std::complex<double>(rng.real(-2.0, 2.0),
                                                      rng.real(-2.0, 2.0)));
    }
    if (d_pts.empty()) {
      d_pts.push_back(reps.front());
      coeffs.emplace_back(reps.front(), std::complex<double>(1.0, 0.0));
    }

    // every fifth instance, corrupt the spectrum with a coset collision
    const bool corrupt = trial % 5 == 0 && lam.size() >= 2;
    if (corrupt) {
      const GroupElement base = d_pts.front();
      GroupElement twin = base;
      for (const GroupElement& l : lam) {
        if (!(spec.add(base, l) == base)) {
          twin = spec.add(base, l);
          break;
        }
      }
      d_pts.push_back(twin);
    }
    const PointSet d = PointSet::of(spec, d_pts);

    if (corrupt) {
      ++rejected;
      const auto witness = th::aliasing_witness(h, d);
      if (!witness.has_value()) {
        return {false, "rejected spectrum without an aliasing witness"};
      }
      const auto s1 = th::sample_on_subgroup(witness->first, h);
      const auto s2 = th::sample_on_subgroup(witness->second, h);
      double sample_gap = 0.0, signal_gap = 0.0;
      for (std::size_t i = 0; i < s1.size(); ++i) {
        sample_gap = std::max(sample_gap, std::abs(s1[i] - s2[i]));
      }
      for (std::size_t i = 0; i < witness->first.values.size(); ++i) {
        signal_gap = std::max(signal_gap, std::abs(witness->first.values[i] -
                                                   witness->second.values[i]));
      }
      if (sample_gap > 1e-12 || signal_gap < 1e-6) {
        return {false, "aliasing witness is not a counterexample"};
      }
      bool threw = false;
      try {
        (void)th::reconstruct(s1, h, d);
      } catch (const th::error&) {
        threw = true;
      }
      if (!threw) return {false, "ambiguous spectrum was not rejected"};
      continue;
    }

    const Signal x = th::synthesize(spec, coeffs);
    const auto samples = th::sample_on_subgroup(x, h);
    const Signal rec = th::reconstruct(samples, h, d);
    const Signal reck = th::reconstruct_with_kernel(samples, h, d);
    for (std::size_t i = 0; i < x.values.size(); ++i) {
      worst_roundtrip =
          std::max(worst_roundtrip, std::abs(rec.values[i] - x.values[i]));
      worst_kernel =
          std::max(worst_kernel, std::abs(reck.values[i] - rec.values[i]));
    }
    if (worst_roundtrip > 1e-9 || worst_kernel > 1e-9) {
      return {false, "tolerance exceeded at trial " + std::to_string(trial) +
                         ": roundtrip " + fmt(worst_roundtrip) + ", kernel " +
                         fmt(worst_kernel)};
    }
  }
  return {true, "1000 trips, max roundtrip " + fmt(worst_roundtrip) +
                    ", max kernel gap " + fmt(worst_kernel) + ", " +
                    std::to_string(rejected) + " spectra rejected with witnesses"};
}

// ---- 8. regression instance -----------------------------------------------

Criterion criterion_8() {
  const GroupSpec z6 = th::make_group({6});
  const auto el = [](std::vector<Int> c) { return GroupElement{std::move(c)}; };
  const Subgroup h = th::subgroup_from_generators(z6, {el({2})});
  const Subgroup lam = th::annihilator(h);
  if (!(lam.elements() == std::vector<GroupElement>{el({0}), el({3})})) {
    return {false, "annihilator of <2> in Z_6 is not {0,3}"};
  }
  const QuotientMap q = th::quotient(lam);

  const auto m03 =
      DiscreteMeasure::nonnegative(z6, {{el({0}), 1.0}, {el({3}), 1.0}});
  const auto v03 = th::is_dense_rank(m03, h);
  if (v03.dense || v03.rank != 1) return {false, "mu = d0+d3 must have rank 1"};
  const auto err = th::best_approximation_error(
      m03, h, {{1.0, 0.0}, {0.0, 0.0}}, 2.0);
  if (std::abs(err.error - std::sqrt(0.5)) > 1e-10) {
    return {false, "alpha=2 error differs from sqrt(1/2): " + fmt(err.error)};
  }
  const auto ex03 = th::extract_concentration_set(m03, q);
  if (ex03.success || ex03.overlaps.size() != 1 ||
      !(ex03.overlaps[0].lambda == el({0})) ||
      !(ex03.overlaps[0].kappa == el({3})) ||
      !(ex03.overlaps[0].points.points() == std::vector<GroupElement>{el({0})})) {
    return {false, "overlap report for mu = d0+d3 is wrong"};
  }

  const auto m01 =
      DiscreteMeasure::nonnegative(z6, {{el({0}), 1.0}, {el({1}), 1.0}});
  if (!th::is_dense_rank(m01, h).dense || !th::is_dense_coset(m01, q).dense) {
    return {false, "mu = d0+d1 must be dense"};
  }
  const auto ex01 = th::extract_concentration_set(m01, q);
  if (!ex01.success ||
      !(ex01.concentration_set.points() ==
        std::vector<GroupElement>{el({0}), el({1})})) {
    return {false, "extraction for mu = d0+d1 is wrong"};
  }
  return {true, "Z_6 with H = <2>: rank, sqrt(1/2), extraction all exact"};
}

// ---- 9. CLI determinism and exit codes ------------------------------------

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  CliResult r;
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Criterion criterion_9(const std::string& cli) {
  if (cli.empty()) return {false, "no --cli path given"};

  const std::string sweep_cfg =
      R"('{"family":{"kind":"random_products","max_order":2000,"max_rank":3},)"
      R"("supports":{"mode":"random","max_size":6},"instances":400,)"
      R"("weights":"random","seed":20250809}')";
  const auto first = run_cli(cli, "sweep equivalence --config " + sweep_cfg);
  const auto second = run_cli(cli, "sweep equivalence --config " + sweep_cfg);
  if (first.exit_code != 0 || second.exit_code != 0) {
    return {false, "seeded sweep did not exit 0"};
  }
  if (first.out != second.out || first.out.empty()) {
    return {false, "seeded sweep reports are not byte-identical"};
  }

  const std::string z6 = R"('{"invariant_factors":[6]}')";
  const std::string h2 = R"('{"generators":[[2]]}')";
  const std::string lam3 = R"('{"generators":[[3]]}')";
  const std::string m03 =
      R"('{"atoms":[{"point":[0],"weight":1.0},{"point":[3],"weight":1.0}],"kind":"nonnegative"}')";
  const std::string m01 =
      R"('{"atoms":[{"point":[0],"weight":1.0},{"point":[1],"weight":1.0}],"kind":"nonnegative"}')";

  const std::vector<std::pair<std::string, int>> corpus = {
      {"group --group " + z6, 0},
      {"group --group '{\"invariant_factors\":[0]}'", 2},
      {"group --group '{bad json'", 2},
      {"annihilator --group " + z6 + " --subgroup " + h2, 0},
      {"quotient --group " + z6 + " --subgroup " + lam3, 0},
      {"transversal check --group " + z6 + " --subgroup " + lam3 +
           " --points '{\"points\":[[0],[1],[2]]}'",
       0},
      {"transversal check --group " + z6 + " --subgroup " + lam3 +
           " --points '{\"points\":[[0],[3]]}'",
       1},
      {"transversal canonical --group " + z6 + " --subgroup " + lam3, 0},
      {"transversal merge --group " + z6 + " --subgroup " + lam3 +
           " --s '{\"points\":[]}' --r '{\"points\":[[0],[1],[2]]}'",
       0},
      {"transversal merge --group " + z6 + " --subgroup " + lam3 +
           " --s '{\"points\":[[0],[3]]}' --r '{\"points\":[[0],[1],[2]]}'",
       2},
      {"density check --group " + z6 + " --subgroup " + h2 + " --measure " +
           m03,
       1},
      {"density check --group " + z6 + " --subgroup " + h2 + " --measure " +
           m01,
       0},
      {"density check --method coset --group " + z6 + " --subgroup " + h2 +
           " --measure " + m03,
       1},
      {"density bestapprox --group " + z6 + " --subgroup " + h2 +
           " --measure " + m03 + " --f '[1,0]' --alpha 2",
       0},
      {"density extract --group " + z6 + " --subgroup " + h2 + " --measure " +
           m01,
       0},
      {"density extract --group " + z6 + " --subgroup " + h2 + " --measure " +
           m03,
       1},
      {"measure push --group " + z6 + " --subgroup " + lam3 + " --measure " +
           m03,
       0},
      {"measure concentrated --group " + z6 + " --subgroup " + lam3 +
           " --measure " + m03,
       1},
      {"measure concentrated --group " + z6 + " --subgroup " + lam3 +
           " --measure " + m01,
       0},
      {"measure fibers --group " + z6 + " --subgroup " + lam3 + " --measure " +
           m01,
       0},
      {"reconstruct --group '{\"invariant_factors\":[12]}' --subgroup "
       "'{\"generators\":[[3]]}' --samples '[1,0,0,0]' --spectrum "
       "'{\"points\":[[1],[5]]}'",
       2},
      {"sweep equivalence --config '{\"notaconfig\":true}'", 0},
  };
  // the last entry is a config with only defaults; expect a valid empty run
  int index = 0;
  for (const auto& [args, expected] : corpus) {
    const auto res = run_cli(cli, args);
    if (res.exit_code != expected) {
      return {false, "corpus entry " + std::to_string(index) + " exited " +
                         std::to_string(res.exit_code) + ", expected " +
                         std::to_string(expected)};
    }
    // every output is either valid JSON or help text; parse the JSON ones
    if (!res.out.empty() && res.out.front() == '{') {
      try {
        (void)th::jsonio::json::parse(res.out);
      } catch (const std::exception&) {
        return {false, "corpus entry " + std::to_string(index) +
                           " printed invalid JSON"};
      }
    }
    ++index;
  }

  // determinism of an ordinary command
  const std::string check_args = "density check --group " + z6 +
                                 " --subgroup " + h2 + " --measure " + m03;
  if (run_cli(cli, check_args).out != run_cli(cli, check_args).out) {
    return {false, "density check output is not deterministic"};
  }
  return {true, "byte-identical sweeps, " + std::to_string(corpus.size()) +
                    " corpus invocations with conforming exit codes"};
}

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;  // 0 = all
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else {
      std::cerr << "usage: th_acceptance [--criterion N] [--cli PATH]\n";
      return 2;
    }
  }

  const std::vector<std::pair<int, std::function<Criterion()>>> criteria = {
      {1, criterion_1},
      {2, criterion_2},
      {3, criterion_3},
      {4, criterion_4},
      {5, criterion_5},
      {6, criterion_6},
      {7, criterion_7},
      {8, criterion_8},
      {9, [&cli] { return criterion_9(cli); }},
  };

  bool all_pass = true;
  for (const auto& [id, fn] : criteria) {
    if (selected != 0 && selected != id) continue;
    const Criterion c = fn();
    all_pass = all_pass && c.pass;
    std::cout << "criterion " << id << " [" << (c.pass ? "PASS" : "FAIL")
              << "] " << c.detail << "\n";
  }
  return all_pass ? 0 : 1;
}
