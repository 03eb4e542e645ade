#pragma once

// Equivalence sweep driver: runs the rank oracle and the coset oracle on a
// family of seeded or exhaustive instances and reports every disagreement.
// A fixed seed makes the report byte-reproducible.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "th/density.hpp"

namespace th::sweep {

struct SweepConfig {
  enum class Family { cyclic, products, random_products };
  enum class Supports { exhaustive, random };

  Family family = Family::cyclic;
  Int min_n = 1;                                // cyclic family
  Int max_n = 12;
  std::vector<std::vector<Int>> product_specs;  // products family
  Int max_order = 10'000;                       // random_products family
  Int max_rank = 3;

  bool subgroups_all = true;   // else: random subgroups per group
  Int subgroups_random = 2;

  Supports supports = Supports::exhaustive;
  Int max_support = 3;
  Int instances = 0;           // total instances in random-support mode

  bool unit_weights = true;    // else uniform random weights in [0.1, 10]
  std::uint64_t seed = 1;
  double rank_tol = kDefaultRankTolerance;
  std::optional<std::string> output;  // also write the report to this path

  static SweepConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct SweepOutcome {
  nlohmann::json report;
  Int instances = 0;
  Int disagreements = 0;
};

SweepOutcome run_equivalence_sweep(const SweepConfig& config);

}  // namespace th::sweep
