#pragma once

#include <vector>

#include "th/subgroup.hpp"

namespace th {

/// The projection π : Γ → Γ/Λ with canonical (lexicographically minimal)
/// coset representatives. canonical_rep is a pure function computed by
/// triangular descent on Λ's basis; the set of representatives is the box
/// ∏_i [0, b_ii) over the basis diagonal. Immutable.
class QuotientMap {
 public:
  const GroupSpec& parent() const noexcept { return parent_; }
  const Subgroup& lambda() const noexcept { return lambda_; }

  /// Number of Λ-cosets, [Γ : Λ].
  Int index() const noexcept { return index_; }

  /// Isomorphism class of Γ/Λ via the Smith normal form of the stacked
  /// matrix [diag(n); basis(Λ)]; may contain trivial factors 1.
  const GroupSpec& quotient_spec() const noexcept { return quotient_spec_; }

  /// Lexicographically smallest element of γ + Λ.
  GroupElement canonical_rep(const GroupElement& gamma) const;

  bool same_coset(const GroupElement& a, const GroupElement& b) const;

  /// All canonical representatives in lexicographic order.
  std::vector<GroupElement> representatives(
      Int max_enumeration = kDefaultMaxEnumeration) const;

 private:
  friend QuotientMap quotient(const Subgroup& lambda);

  QuotientMap(GroupSpec parent, Subgroup lambda, GroupSpec quotient_spec,
              Int index);

  GroupSpec parent_;
  Subgroup lambda_;
  GroupSpec quotient_spec_;
  Int index_ = 1;
};

/// Quotient of lambda.parent() by lambda.
QuotientMap quotient(const Subgroup& lambda);

}  // namespace th
