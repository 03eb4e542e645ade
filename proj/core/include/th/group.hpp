#pragma once

#include <compare>
#include <complex>
#include <vector>

#include "th/common.hpp"

namespace th {

/// Element of a finite abelian group. Coordinates are kept reduced modulo the
/// parent's invariant factors, so equality is coordinate-wise and the default
/// ordering is lexicographic.
struct GroupElement {
  std::vector<Int> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A finite abelian group Z_{n_1} ⊕ … ⊕ Z_{n_r} presented by its cyclic
/// orders. The same spec doubles as the dual group via the exponential
/// pairing below. Factors are stored exactly as given; the divisibility-chain
/// normalization is a view (see QuotientMap::quotient_spec), never the
/// storage. Immutable after construction; safe to share between threads.
class GroupSpec {
 public:
  /// Trivial group (empty product, order 1).
  GroupSpec() = default;

  /// Validates every factor >= 1 and order() <= max_order.
  explicit GroupSpec(std::vector<Int> invariant_factors,
                     Int max_order = kDefaultMaxGroupOrder);

  const std::vector<Int>& invariant_factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  Int order() const noexcept { return order_; }
  /// Group exponent, lcm of the invariant factors. Every pairing value is a
  /// fraction with this denominator.
  Int exponent() const noexcept { return exponent_; }

  bool valid(const GroupElement& x) const noexcept;
  /// Throws error("dimension_mismatch") or error("invalid_element").
  void require_valid(const GroupElement& x) const;

  GroupElement zero() const;
  /// Reduces arbitrary integer coordinates into canonical form.
  GroupElement reduce(std::vector<Int> coords) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;

  /// Position of x in lexicographic enumeration order (mixed-radix rank).
  Int index_of(const GroupElement& x) const;
  GroupElement element_at(Int index) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<Int> factors_;
  Int order_ = 1;
  Int exponent_ = 1;
};

GroupSpec make_group(std::vector<Int> invariant_factors,
                     Int max_order = kDefaultMaxGroupOrder);

/// Value t of Q/Z stored as a reduced fraction num/den with 0 <= num < den;
/// denotes the unit complex number e^{2πi t}. Addition is mod 1 and exact.
class Rotation {
 public:
  Rotation() = default;  // zero rotation 0/1

  /// Reduces an arbitrary fraction; den must be nonzero.
  static Rotation of(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  Rotation operator+(const Rotation& o) const;
  Rotation operator-(const Rotation& o) const;
  Rotation operator-() const;

  /// e^{2πi num/den}, evaluated in floating point.
  std::complex<double> unit() const;

  friend bool operator==(const Rotation&, const Rotation&) = default;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

/// The dual pairing ⟨γ,x⟩ = e^{2πi Σ_j γ_j x_j / n_j} as an exact rotation.
Rotation pairing(const GroupSpec& spec, const GroupElement& gamma,
                 const GroupElement& x);

/// Numerator of the pairing over the fixed denominator den, i.e. the integer
/// t in [0, den) with ⟨γ,x⟩ = e^{2πi t/den}. den must be a common multiple of
/// the invariant factors (spec.exponent() always works).
Int scaled_pairing(const GroupSpec& spec, const GroupElement& gamma,
                   const GroupElement& x, Int den);

/// All elements in lexicographic order. Throws when order() exceeds the bound.
std::vector<GroupElement> enumerate_elements(
    const GroupSpec& spec, Int max_enumeration = kDefaultMaxEnumeration);

}  // namespace th
