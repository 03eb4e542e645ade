#pragma once

#include <vector>

#include "th/group.hpp"
#include "th/lattice.hpp"

namespace th {

/// Subgroup of a finite abelian group, held in canonical form: the unique
/// Hermite-reduced row basis of its preimage lattice in Z^r (the lattice
/// always contains diag(n_1,…,n_r), so the basis is square and upper
/// triangular with pivots dividing the factors). Two Subgroup values are
/// equal as sets iff their bases are identical matrices. Immutable.
class Subgroup {
 public:
  static Subgroup from_generators(const GroupSpec& parent,
                                  const std::vector<GroupElement>& generators);
  static Subgroup trivial(const GroupSpec& parent);
  static Subgroup full(const GroupSpec& parent);

  const GroupSpec& parent() const noexcept { return parent_; }
  const IntMat& basis() const noexcept { return basis_; }
  Int order() const noexcept { return order_; }

  /// Exact membership by triangular divisibility descent on the basis.
  bool contains(const GroupElement& x) const;

  /// Nonzero canonical basis rows reduced into the group; a generating set.
  std::vector<GroupElement> generators() const;

  /// All elements, lexicographically sorted. Throws past the bound.
  std::vector<GroupElement> elements(
      Int max_enumeration = kDefaultMaxEnumeration) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.basis_ == b.basis_;
  }

 private:
  Subgroup(GroupSpec parent, IntMat basis);

  GroupSpec parent_;
  IntMat basis_;
  Int order_ = 1;
};

Subgroup subgroup_from_generators(const GroupSpec& spec,
                                  const std::vector<GroupElement>& generators);

/// Annihilator Λ = {γ : ⟨γ,y⟩ = 1 for all y in h}, computed by exact
/// congruence solving on h's basis (Smith normal form), not by enumeration.
Subgroup annihilator(const Subgroup& h);

std::vector<GroupElement> enumerate_elements(
    const Subgroup& h, Int max_enumeration = kDefaultMaxEnumeration);

/// Every subgroup of the group, deduplicated by canonical basis and sorted.
/// Enumerates candidate Hermite bases column by column; desk scale only.
std::vector<Subgroup> all_subgroups(const GroupSpec& spec);

}  // namespace th
