#pragma once

#include <utility>
#include <vector>

#include "th/quotient.hpp"

namespace th {

/// Finite subset of a group: duplicate-free and lexicographically sorted.
class PointSet {
 public:
  PointSet() = default;

  /// Validates the points against the spec, sorts and deduplicates.
  static PointSet of(const GroupSpec& parent, std::vector<GroupElement> points);

  const GroupSpec& parent() const noexcept { return parent_; }
  const std::vector<GroupElement>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(const GroupElement& x) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  GroupSpec parent_;
  std::vector<GroupElement> points_;
};

/// Right inverse τ of the projection π, tabulated on the canonical coset
/// representatives: π(τ(rep)) = rep for every coset.
struct CrossSection {
  QuotientMap quotient;
  /// (canonical representative, chosen point) pairs, sorted by representative.
  std::vector<std::pair<GroupElement, GroupElement>> table;

  /// τ(rep); throws error("unknown_coset_rep") if rep is not canonical.
  const GroupElement& image(const GroupElement& rep) const;
};

/// True iff no two distinct points of s share a Λ-coset
/// (equivalently: canonical_rep is injective on s).
bool is_partial_transversal(const QuotientMap& q, const PointSet& s);

/// True iff t meets every Λ-coset exactly once: canonical_rep restricted to
/// t is a bijection onto the set of representatives.
bool is_transversal(const QuotientMap& q, const PointSet& t);

/// The set of canonical coset representatives; always a transversal.
PointSet canonical_transversal(const QuotientMap& q,
                               Int max_enumeration = kDefaultMaxEnumeration);

/// S ∪ [R ∖ π⁻¹(π(S))]: extends the partial transversal s to a full
/// transversal using r. Preconditions are validated and reported distinctly:
/// error("s_not_partial_transversal") / error("r_not_transversal").
PointSet merge_transversal(const QuotientMap& q, const PointSet& s,
                           const PointSet& r);

/// Tabulates the cross-section of a transversal t; throws
/// error("not_a_transversal") otherwise.
CrossSection cross_section(const QuotientMap& q, const PointSet& t);

}  // namespace th
