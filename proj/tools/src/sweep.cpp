#include "th_cli/sweep.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "th_cli/json_io.hpp"

namespace th::sweep {
namespace {

using jsonio::json;

[[noreturn]] void bad_config(const std::string& what) {
  throw error("bad_config", what);
}

struct Instance {
  GroupSpec spec;
  Subgroup h;
  DiscreteMeasure m;

  Instance(GroupSpec s, Subgroup sub, DiscreteMeasure mu)
      : spec(std::move(s)), h(std::move(sub)), m(std::move(mu)) {}
};

json dump_instance(const Instance& inst, const DensityVerdict& rank_v,
                   const DensityVerdict& coset_v) {
  return json{{"coset", jsonio::to_json(coset_v)},
              {"group", jsonio::to_json(inst.spec)},
              {"measure", jsonio::to_json(inst.m)},
              {"rank", jsonio::to_json(rank_v)},
              {"subgroup", jsonio::to_json(inst.h)}};
}

class Driver {
 public:
  explicit Driver(const SweepConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  SweepOutcome run() {
    if (cfg_.supports == SweepConfig::Supports::exhaustive) {
      for (const GroupSpec& spec : family_groups()) {
        for (const Subgroup& h : subgroups_of(spec)) {
          exhaustive_supports(spec, h);
        }
      }
    } else {
      random_instances();
    }
    json report{{"agreements", agreements_},
                {"config", cfg_.to_json()},
                {"disagreements", disagreements_},
                {"instances", agreements_ + static_cast<Int>(disagreements_.size())}};
    return SweepOutcome{std::move(report),
                        agreements_ + static_cast<Int>(disagreements_.size()),
                        static_cast<Int>(disagreements_.size())};
  }

 private:
  std::vector<GroupSpec> family_groups() {
    std::vector<GroupSpec> out;
    switch (cfg_.family) {
      case SweepConfig::Family::cyclic:
        for (Int n = std::max<Int>(1, cfg_.min_n); n <= cfg_.max_n; ++n) {
          out.emplace_back(std::vector<Int>{n});
        }
        break;
      case SweepConfig::Family::products:
        for (const auto& factors : cfg_.product_specs) {
          out.emplace_back(factors);
        }
        break;
      case SweepConfig::Family::random_products:
        bad_config("random_products requires random supports");
    }
    return out;
  }

  GroupSpec random_group() {
    const Int rank = uniform(1, cfg_.max_rank);
    std::vector<Int> factors;
    Int budget = cfg_.max_order;
    for (Int i = 0; i < rank; ++i) {
      const Int f = uniform(1, std::max<Int>(1, budget));
      factors.push_back(f);
      budget /= std::max<Int>(1, f);
    }
    return GroupSpec(factors);
  }

  std::vector<Subgroup> subgroups_of(const GroupSpec& spec) {
    if (cfg_.subgroups_all) return all_subgroups(spec);
    std::vector<Subgroup> out;
    for (Int i = 0; i < cfg_.subgroups_random; ++i) {
      out.push_back(random_subgroup(spec));
    }
    return out;
  }

  Subgroup random_subgroup(const GroupSpec& spec) {
    std::vector<GroupElement> gens;
    const Int count = uniform(0, 3);
    for (Int i = 0; i < count; ++i) gens.push_back(random_element(spec));
    return Subgroup::from_generators(spec, gens);
  }

  GroupElement random_element(const GroupSpec& spec) {
    std::vector<Int> c(spec.rank());
    for (std::size_t j = 0; j < spec.rank(); ++j) {
      c[j] = uniform(0, spec.invariant_factors()[j] - 1);
    }
    return GroupElement{std::move(c)};
  }

  void exhaustive_supports(const GroupSpec& spec, const Subgroup& h) {
    const QuotientMap q = quotient(annihilator(h));
    const auto all = enumerate_elements(spec);
    const Int max_size =
        std::min<Int>(cfg_.max_support, static_cast<Int>(all.size()));
    std::vector<std::size_t> idx;
    // combinations of each size via an index odometer
    for (Int size = 1; size <= max_size; ++size) {
      idx.assign(static_cast<std::size_t>(size), 0);
      for (Int i = 0; i < size; ++i) {
        idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
      }
      for (;;) {
        std::vector<std::pair<GroupElement, double>> atoms;
        for (std::size_t i : idx) atoms.emplace_back(all[i], weight());
        check_instance(Instance(spec, h, DiscreteMeasure::nonnegative(spec, atoms)), q);

        // next combination
        Int pos = size - 1;
        while (pos >= 0 &&
               idx[static_cast<std::size_t>(pos)] ==
                   all.size() - static_cast<std::size_t>(size - pos)) {
          --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (Int i = pos + 1; i < size; ++i) {
          idx[static_cast<std::size_t>(i)] =
              idx[static_cast<std::size_t>(i - 1)] + 1;
        }
      }
    }
  }

  void random_instances() {
    for (Int i = 0; i < cfg_.instances; ++i) {
      const GroupSpec spec = cfg_.family == SweepConfig::Family::cyclic
                                 ? GroupSpec({uniform(std::max<Int>(1, cfg_.min_n),
                                                      cfg_.max_n)})
                             : cfg_.family == SweepConfig::Family::products
                                 ? GroupSpec(cfg_.product_specs[static_cast<std::size_t>(
                                       uniform(0, static_cast<Int>(
                                                      cfg_.product_specs.size()) -
                                                      1))])
                                 : random_group();
      const Subgroup h = random_subgroup(spec);
      const QuotientMap q = quotient(annihilator(h));

      const Int size =
          uniform(1, std::min<Int>(cfg_.max_support, spec.order()));
      std::set<GroupElement> pts;
      while (static_cast<Int>(pts.size()) < size) {
        pts.insert(random_element(spec));
      }
      std::vector<std::pair<GroupElement, double>> atoms;
      for (const auto& p : pts) atoms.emplace_back(p, weight());
      check_instance(Instance(spec, h, DiscreteMeasure::nonnegative(spec, atoms)), q);
    }
  }

  void check_instance(const Instance& inst, const QuotientMap& q) {
    const DensityVerdict rank_v =
        is_dense_rank(inst.m, inst.h, 2.0, cfg_.rank_tol);
    const DensityVerdict coset_v = is_dense_coset(inst.m, q);
    if (rank_v.dense == coset_v.dense && rank_v.rank == coset_v.rank) {
      ++agreements_;
    } else {
      disagreements_.push_back(dump_instance(inst, rank_v, coset_v));
    }
  }

  Int uniform(Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng_);
  }

  double weight() {
    if (cfg_.unit_weights) return 1.0;
    return std::uniform_real_distribution<double>(0.1, 10.0)(rng_);
  }

  const SweepConfig& cfg_;
  std::mt19937_64 rng_;
  Int agreements_ = 0;
  json disagreements_ = json::array();
};

}  // namespace

SweepConfig SweepConfig::from_json(const json& j) {
  if (!j.is_object()) bad_config("sweep config must be a JSON object");
  SweepConfig cfg;

  if (j.contains("family")) {
    const auto& fam = j["family"];
    if (!fam.is_object() || !fam.contains("kind") || !fam["kind"].is_string()) {
      bad_config("family needs a string kind");
    }
    const std::string kind = fam["kind"].get<std::string>();
    if (kind == "cyclic") {
      cfg.family = Family::cyclic;
      if (fam.contains("min_n")) cfg.min_n = fam["min_n"].get<Int>();
      if (fam.contains("max_n")) cfg.max_n = fam["max_n"].get<Int>();
      if (cfg.min_n < 1 || cfg.max_n < cfg.min_n) bad_config("bad cyclic range");
    } else if (kind == "products") {
      cfg.family = Family::products;
      if (!fam.contains("specs") || !fam["specs"].is_array() ||
          fam["specs"].empty()) {
        bad_config("products family needs a nonempty specs array");
      }
      for (const auto& s : fam["specs"]) {
        cfg.product_specs.push_back(s.get<std::vector<Int>>());
      }
    } else if (kind == "random_products") {
      cfg.family = Family::random_products;
      if (fam.contains("max_order")) cfg.max_order = fam["max_order"].get<Int>();
      if (fam.contains("max_rank")) cfg.max_rank = fam["max_rank"].get<Int>();
      if (cfg.max_order < 1 || cfg.max_rank < 1) bad_config("bad random family");
    } else {
      bad_config("unknown family kind " + kind);
    }
  }

  if (j.contains("subgroups")) {
    const auto& s = j["subgroups"];
    if (s.is_string() && s.get<std::string>() == "all") {
      cfg.subgroups_all = true;
    } else if (s.is_object() && s.contains("random")) {
      cfg.subgroups_all = false;
      cfg.subgroups_random = s["random"].get<Int>();
      if (cfg.subgroups_random < 1) bad_config("bad subgroup count");
    } else {
      bad_config("subgroups is \"all\" or {\"random\":k}");
    }
  }

  if (j.contains("supports")) {
    const auto& s = j["supports"];
    if (!s.is_object() || !s.contains("mode") || !s["mode"].is_string()) {
      bad_config("supports needs a mode");
    }
    const std::string mode = s["mode"].get<std::string>();
    if (mode == "exhaustive") {
      cfg.supports = Supports::exhaustive;
    } else if (mode == "random") {
      cfg.supports = Supports::random;
    } else {
      bad_config("supports mode is exhaustive or random");
    }
    if (s.contains("max_size")) cfg.max_support = s["max_size"].get<Int>();
    if (cfg.max_support < 1) bad_config("bad support size");
  }

  if (j.contains("instances")) {
    cfg.instances = j["instances"].get<Int>();
    if (cfg.instances < 0) bad_config("instances must be >= 0");
  }
  if (j.contains("weights")) {
    const auto& w = j["weights"];
    if (w.is_string() && w.get<std::string>() == "unit") {
      cfg.unit_weights = true;
    } else if (w.is_string() && w.get<std::string>() == "random") {
      cfg.unit_weights = false;
    } else {
      bad_config("weights is \"unit\" or \"random\"");
    }
  }
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("rank_tol")) {
    cfg.rank_tol = j["rank_tol"].get<double>();
    if (!(cfg.rank_tol > 0.0)) bad_config("rank_tol must be positive");
  }
  if (j.contains("output")) {
    if (!j["output"].is_string()) bad_config("output must be a path");
    cfg.output = j["output"].get<std::string>();
  }

  if (cfg.supports == Supports::random && cfg.instances == 0) {
    // zero instances is a valid (empty) run; nothing else to validate
  }
  if (cfg.supports == Supports::exhaustive &&
      cfg.family == Family::random_products) {
    bad_config("exhaustive supports need a finite group family");
  }
  return cfg;
}

json SweepConfig::to_json() const {
  json fam;
  switch (family) {
    case Family::cyclic:
      fam = json{{"kind", "cyclic"}, {"max_n", max_n}, {"min_n", min_n}};
      break;
    case Family::products:
      fam = json{{"kind", "products"}, {"specs", product_specs}};
      break;
    case Family::random_products:
      fam = json{{"kind", "random_products"},
                 {"max_order", max_order},
                 {"max_rank", max_rank}};
      break;
  }
  json subs = subgroups_all ? json("all") : json{{"random", subgroups_random}};
  json sup{{"max_size", max_support},
           {"mode", supports == Supports::exhaustive ? "exhaustive" : "random"}};
  json out{{"family", std::move(fam)},
           {"instances", instances},
           {"rank_tol", rank_tol},
           {"seed", seed},
           {"subgroups", std::move(subs)},
           {"supports", std::move(sup)},
           {"weights", unit_weights ? "unit" : "random"}};
  if (output) out["output"] = *output;
  return out;
}

SweepOutcome run_equivalence_sweep(const SweepConfig& config) {
  return Driver(config).run();
}

}  // namespace th::sweep
