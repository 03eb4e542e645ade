#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "th/transversal.hpp"

namespace th {

enum class WeightKind { nonnegative, complex_valued };

struct Atom {
  GroupElement point;
  std::complex<double> weight;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finitely supported atomic measure on a group. Atoms are sorted by point
/// and pairwise distinct; zero weights are rejected at construction (the
/// support must equal the atom set), and nonnegative measures have real
/// weights > 0. The combinatorial predicates below depend only on the
/// support, never on weight arithmetic. Immutable.
class DiscreteMeasure {
 public:
  static DiscreteMeasure nonnegative(
      const GroupSpec& parent,
      const std::vector<std::pair<GroupElement, double>>& atoms);
  static DiscreteMeasure complex_valued(
      const GroupSpec& parent,
      const std::vector<std::pair<GroupElement, std::complex<double>>>& atoms);
  static DiscreteMeasure zero(const GroupSpec& parent,
                              WeightKind kind = WeightKind::nonnegative);
  static DiscreteMeasure dirac(const GroupSpec& parent, const GroupElement& x,
                               double weight = 1.0);

  const GroupSpec& parent() const noexcept { return parent_; }
  WeightKind kind() const noexcept { return kind_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  std::complex<double> mass() const;
  PointSet support() const;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  friend DiscreteMeasure pushforward(const DiscreteMeasure&, const QuotientMap&);
  friend std::vector<std::pair<GroupElement, DiscreteMeasure>> fibers(
      const DiscreteMeasure&, const QuotientMap&);
  friend DiscreteMeasure translate(const DiscreteMeasure&, const GroupElement&);
  friend DiscreteMeasure restrict_to(const DiscreteMeasure&, const PointSet&);

  DiscreteMeasure(GroupSpec parent, WeightKind kind, std::vector<Atom> atoms);

  GroupSpec parent_;
  WeightKind kind_ = WeightKind::nonnegative;
  std::vector<Atom> atoms_;
};

/// Image measure μπ⁻¹ on the canonical coset representatives: the weight of
/// a representative is the sum over its coset; exact cancellations of a
/// complex measure drop the atom.
DiscreteMeasure pushforward(const DiscreteMeasure& m, const QuotientMap& q);

/// Partition of m by Λ-coset: (representative, restriction of m to the
/// coset) pairs sorted by representative, empty fibers omitted. Requires a
/// nonnegative measure.
std::vector<std::pair<GroupElement, DiscreteMeasure>> fibers(
    const DiscreteMeasure& m, const QuotientMap& q);

struct ConcentrationResult {
  bool concentrated = false;
  /// support(m) when concentrated; it is then a partial transversal.
  PointSet witness;
  /// Lexicographically smallest representative of a coset holding >= 2 atoms.
  std::optional<GroupElement> violating_rep;
};

/// Whether every Λ-coset carries at most one atom of m.
ConcentrationResult is_concentrated_on_transversal(const DiscreteMeasure& m,
                                                   const QuotientMap& q);

/// ∫ ⟨γ,y⟩ ν(dγ) = Σ_atoms w · e^{2πi·pairing(point,y)}. The rotation is
/// exact; only the final exponential is floating point. Requires y ∈ h.
std::complex<double> fourier_coefficient(const DiscreteMeasure& nu,
                                         const Subgroup& h,
                                         const GroupElement& y);

/// Moves the atom at γ to γ − lambda, so the translate of the restriction of
/// m to lambda + T lives on T.
DiscreteMeasure translate(const DiscreteMeasure& m, const GroupElement& lambda);

/// Atoms of m whose points lie in s.
DiscreteMeasure restrict_to(const DiscreteMeasure& m, const PointSet& s);

}  // namespace th
