#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "th/quotient.hpp"

using th::GroupElement;
using th::GroupSpec;
using th::Int;
using th::QuotientMap;
using th::Subgroup;

namespace {
GroupElement el(std::vector<Int> c) { return GroupElement{std::move(c)}; }
}  // namespace

TEST_CASE("quotient structure on the running examples") {
  const GroupSpec z6 = th::make_group({6});
  const Subgroup lam = th::subgroup_from_generators(z6, {el({3})});
  const QuotientMap q = th::quotient(lam);
  CHECK(q.index() == 3);
  CHECK(q.quotient_spec().invariant_factors() == std::vector<Int>{3});
  CHECK(q.representatives() ==
        std::vector<GroupElement>{el({0}), el({1}), el({2})});

  const QuotientMap identity = th::quotient(Subgroup::trivial(z6));
  CHECK(identity.index() == 6);
  CHECK(identity.quotient_spec().order() == 6);
  for (const GroupElement& g : th::enumerate_elements(z6)) {
    CHECK(identity.canonical_rep(g) == g);
  }

  const QuotientMap collapse = th::quotient(Subgroup::full(z6));
  CHECK(collapse.index() == 1);
  CHECK(collapse.quotient_spec().order() == 1);
  CHECK(collapse.representatives() == std::vector<GroupElement>{el({0})});

  const GroupSpec g46 = th::make_group({4, 6});
  const QuotientMap q46 =
      th::quotient(th::subgroup_from_generators(g46, {el({2, 0})}));
  CHECK(q46.index() == 12);
  CHECK(q46.quotient_spec().order() == 12);
  CHECK(q46.representatives().size() == 12);
}

TEST_CASE("canonical representative is the lexicographic coset minimum") {
  oracle::Rng rng(0x9e3779b9);
  for (int trial = 0; trial < 120; ++trial) {
    const GroupSpec spec = rng.spec(3, 100);
    std::vector<GroupElement> gens;
    const Int count = rng.uniform(0, 3);
    for (Int i = 0; i < count; ++i) gens.push_back(rng.element(spec));
    const Subgroup lam = th::subgroup_from_generators(spec, gens);
    const QuotientMap q = th::quotient(lam);
    const auto lam_elems = lam.elements();

    for (const GroupElement& gamma : th::enumerate_elements(spec)) {
      const GroupElement rep = q.canonical_rep(gamma);
      CHECK(rep == oracle::min_of_coset(spec, lam_elems, gamma));
      CHECK(lam.contains(spec.sub(gamma, rep)));  // rep in gamma + lambda
    }
  }
}

TEST_CASE("canonical_rep is constant exactly on cosets") {
  oracle::Rng rng(0x515151);
  for (int trial = 0; trial < 60; ++trial) {
    const GroupSpec spec = rng.spec(2, 60);
    std::vector<GroupElement> gens;
    const Int count = rng.uniform(0, 2);
    for (Int i = 0; i < count; ++i) gens.push_back(rng.element(spec));
    const Subgroup lam = th::subgroup_from_generators(spec, gens);
    const QuotientMap q = th::quotient(lam);

    const auto all = th::enumerate_elements(spec);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const bool same = lam.contains(spec.sub(a, b));
        CHECK(same == (q.canonical_rep(a) == q.canonical_rep(b)));
        CHECK(same == q.same_coset(a, b));
      }
    }
  }
}

TEST_CASE("representative count times subgroup order is the group order") {
  oracle::Rng rng(0x44d);
  for (int trial = 0; trial < 100; ++trial) {
    const GroupSpec spec = rng.spec(3, 4000);
    std::vector<GroupElement> gens;
    const Int count = rng.uniform(0, 3);
    for (Int i = 0; i < count; ++i) gens.push_back(rng.element(spec));
    const Subgroup lam = th::subgroup_from_generators(spec, gens);
    const QuotientMap q = th::quotient(lam);

    CHECK(q.index() * lam.order() == spec.order());
    CHECK(q.quotient_spec().order() == q.index());
  }
}

TEST_CASE("representatives enumerate the canonical image exactly") {
  oracle::Rng rng(0x777);
  for (int trial = 0; trial < 60; ++trial) {
    const GroupSpec spec = rng.spec(2, 80);
    std::vector<GroupElement> gens;
    const Int count = rng.uniform(0, 2);
    for (Int i = 0; i < count; ++i) gens.push_back(rng.element(spec));
    const QuotientMap q =
        th::quotient(th::subgroup_from_generators(spec, gens));

    std::set<GroupElement> image;
    for (const GroupElement& g : th::enumerate_elements(spec)) {
      image.insert(q.canonical_rep(g));
    }
    const auto reps = q.representatives();
    CHECK(std::set<GroupElement>(reps.begin(), reps.end()) == image);
    CHECK(std::is_sorted(reps.begin(), reps.end()));
  }
}

TEST_CASE("trivial group quotient") {
  const GroupSpec triv = th::make_group({});
  const QuotientMap q = th::quotient(Subgroup::full(triv));
  CHECK(q.index() == 1);
  CHECK(q.representatives() == std::vector<GroupElement>{el({})});
  CHECK(q.canonical_rep(el({})) == el({}));
}
