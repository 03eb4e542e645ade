#pragma once

// Brute-force reference implementations shared by the unit suites. Everything
// here is deliberately naive (closures, exhaustive coset tables, angle-sum
// transforms) and independent of the library's algebraic shortcuts.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "th/group.hpp"
#include "th/quotient.hpp"
#include "th/subgroup.hpp"
#include "th/transversal.hpp"

namespace oracle {

using th::GroupElement;
using th::GroupSpec;
using th::Int;

/// Subgroup generated by BFS closure under addition.
inline std::vector<GroupElement> closure(const GroupSpec& spec,
                                         const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen{spec.zero()};
  std::vector<GroupElement> frontier{spec.zero()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        GroupElement y = spec.add(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};  // std::set iterates in sorted order
}

/// Annihilator by testing the pairing against every subgroup element.
inline std::vector<GroupElement> annihilator_by_enumeration(
    const GroupSpec& spec, const std::vector<GroupElement>& h_elements) {
  std::vector<GroupElement> out;
  for (const GroupElement& gamma : th::enumerate_elements(spec)) {
    bool kills_all = true;
    for (const GroupElement& y : h_elements) {
      if (!th::pairing(spec, gamma, y).is_zero()) {
        kills_all = false;
        break;
      }
    }
    if (kills_all) out.push_back(gamma);
  }
  return out;
}

/// Full coset of x under a subgroup given by its element list.
inline std::vector<GroupElement> coset_of(
    const GroupSpec& spec, const std::vector<GroupElement>& lambda_elements,
    const GroupElement& x) {
  std::set<GroupElement> c;
  for (const GroupElement& l : lambda_elements) c.insert(spec.add(x, l));
  return {c.begin(), c.end()};
}

/// "Meets each coset exactly once", straight from the definition.
inline bool is_transversal_by_definition(
    const GroupSpec& spec, const std::vector<GroupElement>& lambda_elements,
    const std::vector<GroupElement>& points) {
  std::set<GroupElement> pts(points.begin(), points.end());
  std::set<GroupElement> done;
  for (const GroupElement& gamma : th::enumerate_elements(spec)) {
    if (done.count(gamma)) continue;
    const auto coset = coset_of(spec, lambda_elements, gamma);
    int hits = 0;
    for (const GroupElement& c : coset) {
      done.insert(c);
      hits += pts.count(c) ? 1 : 0;
    }
    if (hits != 1) return false;
  }
  return true;
}

inline bool is_partial_transversal_by_definition(
    const GroupSpec& spec, const std::vector<GroupElement>& lambda_elements,
    const std::vector<GroupElement>& points) {
  std::set<GroupElement> pts(points.begin(), points.end());
  std::set<GroupElement> done;
  for (const GroupElement& gamma : th::enumerate_elements(spec)) {
    if (done.count(gamma)) continue;
    const auto coset = coset_of(spec, lambda_elements, gamma);
    int hits = 0;
    for (const GroupElement& c : coset) {
      done.insert(c);
      hits += pts.count(c) ? 1 : 0;
    }
    if (hits > 1) return false;
  }
  return true;
}

/// Lexicographic minimum of a coset, by enumeration.
inline GroupElement min_of_coset(const GroupSpec& spec,
                                 const std::vector<GroupElement>& lambda_elements,
                                 const GroupElement& x) {
  const auto coset = coset_of(spec, lambda_elements, x);
  return *std::min_element(coset.begin(), coset.end());
}

/// Pairing evaluated purely in floating point (angle sum), independent of the
/// exact rational path.
inline std::complex<double> pairing_float(const GroupSpec& spec,
                                          const GroupElement& gamma,
                                          const GroupElement& x) {
  double angle = 0.0;
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    angle += static_cast<double>(gamma.coords[j]) *
             static_cast<double>(x.coords[j]) /
             static_cast<double>(spec.invariant_factors()[j]);
  }
  return std::polar(1.0, 2.0 * std::numbers::pi_v<double> * angle);
}

/// Mersenne-twister helpers with explicit seeds so failures replay.
struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  Int uniform(Int lo, Int hi) {  // inclusive bounds
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
  GroupSpec spec(Int max_rank, Int max_order) {
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

  std::mt19937_64 eng;
};

}  // namespace oracle
