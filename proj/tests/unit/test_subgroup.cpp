#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "th/subgroup.hpp"

using th::GroupElement;
using th::GroupSpec;
using th::Int;
using th::Subgroup;

namespace {
GroupElement el(std::vector<Int> c) { return GroupElement{std::move(c)}; }
}  // namespace

TEST_CASE("generated subgroups match the closure oracle") {
  const GroupSpec z6 = th::make_group({6});

  const Subgroup h = th::subgroup_from_generators(z6, {el({2})});
  CHECK(h.order() == 3);
  CHECK(h.elements() == std::vector<GroupElement>{el({0}), el({2}), el({4})});

  const Subgroup trivial = th::subgroup_from_generators(z6, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.elements() == std::vector<GroupElement>{el({0})});
  CHECK(trivial == Subgroup::trivial(z6));

  const Subgroup whole = th::subgroup_from_generators(z6, {el({2}), el({3})});
  CHECK(whole.order() == 6);  // gcd(2,3,6) = 1
  CHECK(whole == Subgroup::full(z6));

  oracle::Rng rng(0x5a5a);
  for (int trial = 0; trial < 200; ++trial) {
    const GroupSpec spec = rng.spec(3, 60);
    std::vector<GroupElement> gens;
    const Int count = rng.uniform(0, 3);
    for (Int i = 0; i < count; ++i) gens.push_back(rng.element(spec));
    const Subgroup s = th::subgroup_from_generators(spec, gens);
    CHECK(s.elements() == oracle::closure(spec, gens));
  }
}

TEST_CASE("canonical form is unique, idempotent and order-insensitive") {
  const GroupSpec z6 = th::make_group({6});
  CHECK(th::subgroup_from_generators(z6, {el({2})}) ==
        th::subgroup_from_generators(z6, {el({4})}));
  CHECK(th::subgroup_from_generators(z6, {el({2})}) !=
        th::subgroup_from_generators(z6, {el({3})}));

  oracle::Rng rng(0xc0ffee);
  for (int trial = 0; trial < 200; ++trial) {
    const GroupSpec spec = rng.spec(3, 200);
    std::vector<GroupElement> gens;
    const Int count = rng.uniform(1, 4);
    for (Int i = 0; i < count; ++i) gens.push_back(rng.element(spec));

    const Subgroup s = th::subgroup_from_generators(spec, gens);

    // permuting the generators yields the identical basis
    std::vector<GroupElement> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng.eng);
    CHECK(th::subgroup_from_generators(spec, shuffled).basis() == s.basis());

    // re-canonicalizing from the echoed generators is the identity
    CHECK(th::subgroup_from_generators(spec, s.generators()).basis() ==
          s.basis());
  }
}

TEST_CASE("membership agrees with enumeration and Lagrange holds") {
  oracle::Rng rng(0xfeed);
  for (int trial = 0; trial < 150; ++trial) {
    const GroupSpec spec = rng.spec(3, 80);
    std::vector<GroupElement> gens;
    const Int count = rng.uniform(0, 3);
    for (Int i = 0; i < count; ++i) gens.push_back(rng.element(spec));
    const Subgroup s = th::subgroup_from_generators(spec, gens);

    CHECK(spec.order() % s.order() == 0);

    const auto members = s.elements();
    const std::set<GroupElement> member_set(members.begin(), members.end());
    for (const GroupElement& x : th::enumerate_elements(spec)) {
      CHECK(s.contains(x) == (member_set.count(x) > 0));
    }
  }
}

TEST_CASE("annihilator on the running example and the extremes") {
  const GroupSpec z6 = th::make_group({6});
  const Subgroup h = th::subgroup_from_generators(z6, {el({2})});
  const Subgroup lam = th::annihilator(h);
  CHECK(lam.elements() == std::vector<GroupElement>{el({0}), el({3})});

  CHECK(th::annihilator(Subgroup::trivial(z6)) == Subgroup::full(z6));
  CHECK(th::annihilator(Subgroup::full(z6)) == Subgroup::trivial(z6));

  const GroupSpec g = th::make_group({4, 6});
  const Subgroup diag = th::subgroup_from_generators(g, {el({1, 1})});
  CHECK(th::annihilator(diag).elements() ==
        std::vector<GroupElement>{el({0, 0}), el({2, 3})});

  const GroupSpec triv = th::make_group({});
  CHECK(th::annihilator(Subgroup::full(triv)).order() == 1);
}

TEST_CASE("annihilator agrees with pairing enumeration") {
  oracle::Rng rng(0xa111);
  for (int trial = 0; trial < 150; ++trial) {
    const GroupSpec spec = rng.spec(3, 120);
    std::vector<GroupElement> gens;
    const Int count = rng.uniform(0, 3);
    for (Int i = 0; i < count; ++i) gens.push_back(rng.element(spec));
    const Subgroup h = th::subgroup_from_generators(spec, gens);

    const Subgroup lam = th::annihilator(h);
    CHECK(lam.elements() ==
          oracle::annihilator_by_enumeration(spec, h.elements()));
  }
}

TEST_CASE("double annihilator is the identity and orders multiply") {
  for (Int n = 1; n <= 50; ++n) {
    const GroupSpec spec = th::make_group({n});
    for (const Subgroup& h : th::all_subgroups(spec)) {
      const Subgroup lam = th::annihilator(h);
      CHECK(lam.order() * h.order() == spec.order());
      CHECK(th::annihilator(lam) == h);
    }
  }
  oracle::Rng rng(0xdada);
  for (int trial = 0; trial < 100; ++trial) {
    const GroupSpec spec = rng.spec(3, 2000);
    std::vector<GroupElement> gens;
    const Int count = rng.uniform(0, 3);
    for (Int i = 0; i < count; ++i) gens.push_back(rng.element(spec));
    const Subgroup h = th::subgroup_from_generators(spec, gens);
    const Subgroup lam = th::annihilator(h);
    CHECK(lam.order() * h.order() == spec.order());
    CHECK(th::annihilator(lam) == h);
  }
}

TEST_CASE("all_subgroups is complete against pairwise generation") {
  // every subgroup of a rank-r product is generated by at most r elements
  for (const GroupSpec& spec :
       {th::make_group({12}), th::make_group({4, 6}), th::make_group({2, 2, 2})}) {
    const auto listed = th::all_subgroups(spec);

    std::set<std::vector<Int>> listed_keys;
    for (const Subgroup& s : listed) {
      std::vector<Int> key;
      for (Eigen::Index i = 0; i < s.basis().rows(); ++i) {
        for (Eigen::Index j = 0; j < s.basis().cols(); ++j) {
          key.push_back(s.basis()(i, j));
        }
      }
      CHECK(listed_keys.insert(key).second);  // no duplicates
    }

    std::set<std::vector<Int>> generated_keys;
    const auto all = th::enumerate_elements(spec);
    auto note = [&](const std::vector<GroupElement>& gens) {
      const Subgroup s = th::subgroup_from_generators(spec, gens);
      std::vector<Int> key;
      for (Eigen::Index i = 0; i < s.basis().rows(); ++i) {
        for (Eigen::Index j = 0; j < s.basis().cols(); ++j) {
          key.push_back(s.basis()(i, j));
        }
      }
      generated_keys.insert(key);
    };
    note({});
    for (std::size_t a = 0; a < all.size(); ++a) {
      note({all[a]});
      for (std::size_t b = a; b < all.size(); ++b) {
        if (spec.rank() >= 2) note({all[a], all[b]});
        for (std::size_t c = b; spec.rank() >= 3 && c < all.size(); ++c) {
          note({all[a], all[b], all[c]});
        }
      }
    }
    CHECK(listed_keys == generated_keys);
  }
}

TEST_CASE("subgroup enumeration respects the bound") {
  const GroupSpec big = th::make_group({2'000'000});
  const Subgroup whole = Subgroup::full(big);
  CHECK_THROWS_AS(whole.elements(), th::error);
  CHECK(th::subgroup_from_generators(big, {el({1'000'000})}).elements().size() ==
        2);
}
