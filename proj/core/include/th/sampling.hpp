#pragma once

#include <complex>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "th/transversal.hpp"

namespace th {

/// Complex-valued signal on a group: one value per element, stored densely
/// in lexicographic element order.
struct Signal {
  GroupSpec group;
  std::vector<std::complex<double>> values;

  friend bool operator==(const Signal&, const Signal&) = default;
};

Signal make_signal(const GroupSpec& group,
                   std::vector<std::complex<double>> values);
Signal zero_signal(const GroupSpec& group);

/// Band-limited synthesis x(g) = Σ c_δ ⟨δ,g⟩ over the listed frequencies.
Signal synthesize(
    const GroupSpec& group,
    const std::vector<std::pair<GroupElement, std::complex<double>>>& coefficients,
    Int max_enumeration = kDefaultMaxEnumeration);

/// Forward transform x̂(γ) = Σ_g x(g) · conj(⟨γ,g⟩), unnormalized.
/// Brute force; bounded by max_enumeration.
Signal dft(const Signal& x, Int max_enumeration = kDefaultMaxEnumeration);

/// Inverse transform with the 1/|G| normalization; idft(dft(x)) == x up to
/// floating-point roundoff.
Signal idft(const Signal& x, Int max_enumeration = kDefaultMaxEnumeration);

/// Restriction of x to the subgroup, in the order of h.elements().
std::vector<std::complex<double>> sample_on_subgroup(
    const Signal& x, const Subgroup& h,
    Int max_enumeration = kDefaultMaxEnumeration);

/// The first pair of spectrum points sharing a Λ-coset, as
/// (representative, first point, second point); nullopt when the spectrum is
/// a partial transversal of annihilator(h).
std::optional<std::tuple<GroupElement, GroupElement, GroupElement>>
spectrum_collision(const QuotientMap& q, const PointSet& spectrum);

/// Reconstructs the unique signal with spectrum inside d from its samples on
/// h (given in h.elements() order): the subgroup DFT of the samples is the
/// Λ-folded spectrum on Γ/Λ, and since d meets each coset at most once every
/// folded value unfolds to one frequency. Throws
/// error("spectrum_not_partial_transversal") when d hits a coset twice and
/// error("sample_count_mismatch") when the table size differs from |H|.
Signal reconstruct(const std::vector<std::complex<double>>& samples,
                   const Subgroup& h, const PointSet& d,
                   Int max_enumeration = kDefaultMaxEnumeration);

/// Interpolation kernel φ(u) = (1/|H|) Σ_{δ∈d} ⟨δ,u⟩. When |d| equals the
/// coset count, φ(0) = 1 and φ vanishes on H ∖ {0}, so shifted-kernel
/// superposition interpolates the samples.
Signal interpolation_kernel(const Subgroup& h, const PointSet& d,
                            Int max_enumeration = kDefaultMaxEnumeration);

/// Same reconstruction by the superposition x(g) = Σ_{y∈H} samples(y) φ(g−y);
/// an independent route used to cross-check `reconstruct`.
Signal reconstruct_with_kernel(const std::vector<std::complex<double>>& samples,
                               const Subgroup& h, const PointSet& d,
                               Int max_enumeration = kDefaultMaxEnumeration);

/// Two distinct band-limited signals with identical samples on h, exhibiting
/// the ambiguity of a rejected spectrum.
struct AliasingWitness {
  GroupElement first_frequency;
  GroupElement second_frequency;
  GroupElement coset_rep;
  Signal first;
  Signal second;
  double max_sample_difference = 0.0;  // sup over H, exactly 0 here
};

/// Constructs the aliasing pair for the first coset collision in d;
/// nullopt when d is a partial transversal (no ambiguity exists).
std::optional<AliasingWitness> aliasing_witness(
    const Subgroup& h, const PointSet& d,
    Int max_enumeration = kDefaultMaxEnumeration);

}  // namespace th
