#include "th/group.hpp"

#include <numbers>
#include <numeric>

namespace th {

GroupSpec::GroupSpec(std::vector<Int> invariant_factors, Int max_order)
    : factors_(std::move(invariant_factors)) {
  for (Int n : factors_) {
    if (n < 1) {
      throw error("bad_factor", "invariant factors must be integers >= 1");
    }
    order_ = detail::checked_mul(order_, n);
    if (order_ > max_order) {
      throw error("order_bound_exceeded",
                  "group order exceeds the configured bound " +
                      std::to_string(max_order));
    }
    exponent_ = std::lcm(exponent_, n);  // divides order_, no overflow
  }
}

bool GroupSpec::valid(const GroupElement& x) const noexcept {
  if (x.coords.size() != factors_.size()) return false;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (x.coords[j] < 0 || x.coords[j] >= factors_[j]) return false;
  }
  return true;
}

void GroupSpec::require_valid(const GroupElement& x) const {
  if (x.coords.size() != factors_.size()) {
    throw error("dimension_mismatch",
                "element has " + std::to_string(x.coords.size()) +
                    " coordinates, group has rank " +
                    std::to_string(factors_.size()));
  }
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (x.coords[j] < 0 || x.coords[j] >= factors_[j]) {
      throw error("invalid_element",
                  "coordinate " + std::to_string(j) + " out of range [0, " +
                      std::to_string(factors_[j]) + ")");
    }
  }
}

GroupElement GroupSpec::zero() const {
  return GroupElement{std::vector<Int>(factors_.size(), 0)};
}

GroupElement GroupSpec::reduce(std::vector<Int> coords) const {
  if (coords.size() != factors_.size()) {
    throw error("dimension_mismatch", "coordinate count does not match rank");
  }
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    coords[j] = detail::pos_mod(coords[j], factors_[j]);
  }
  return GroupElement{std::move(coords)};
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  require_valid(a);
  require_valid(b);
  std::vector<Int> c(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    c[j] = (a.coords[j] + b.coords[j]) % factors_[j];
  }
  return GroupElement{std::move(c)};
}

GroupElement GroupSpec::sub(const GroupElement& a, const GroupElement& b) const {
  require_valid(a);
  require_valid(b);
  std::vector<Int> c(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    c[j] = detail::pos_mod(a.coords[j] - b.coords[j], factors_[j]);
  }
  return GroupElement{std::move(c)};
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
  require_valid(a);
  std::vector<Int> c(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    c[j] = detail::pos_mod(-a.coords[j], factors_[j]);
  }
  return GroupElement{std::move(c)};
}

Int GroupSpec::index_of(const GroupElement& x) const {
  require_valid(x);
  Int index = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    index = index * factors_[j] + x.coords[j];
  }
  return index;
}

GroupElement GroupSpec::element_at(Int index) const {
  if (index < 0 || index >= order_) {
    throw error("invalid_element", "element index out of range");
  }
  std::vector<Int> c(factors_.size());
  for (std::size_t j = factors_.size(); j-- > 0;) {
    c[j] = index % factors_[j];
    index /= factors_[j];
  }
  return GroupElement{std::move(c)};
}

GroupSpec make_group(std::vector<Int> invariant_factors, Int max_order) {
  return GroupSpec(std::move(invariant_factors), max_order);
}

Rotation Rotation::of(Int num, Int den) {
  if (den == 0) throw error("bad_rotation", "rotation denominator is zero");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  num = detail::pos_mod(num, den);
  const Int g = std::gcd(num, den);  // gcd(0, den) == den, giving 0/1
  Rotation r;
  r.num_ = num / g;
  r.den_ = den / g;
  return r;
}

Rotation Rotation::operator+(const Rotation& o) const {
  const Int l = detail::checked_mul(den_ / std::gcd(den_, o.den_), o.den_);
  const Int a = detail::checked_mul(num_, l / den_);
  const Int b = detail::checked_mul(o.num_, l / o.den_);
  return Rotation::of((a + b) % l, l);
}

Rotation Rotation::operator-(const Rotation& o) const { return *this + (-o); }

Rotation Rotation::operator-() const { return Rotation::of(-num_, den_); }

std::complex<double> Rotation::unit() const {
  const double angle = 2.0 * std::numbers::pi_v<double> *
                       (static_cast<double>(num_) / static_cast<double>(den_));
  return std::polar(1.0, angle);
}

Int scaled_pairing(const GroupSpec& spec, const GroupElement& gamma,
                   const GroupElement& x, Int den) {
  spec.require_valid(gamma);
  spec.require_valid(x);
  if (den < 1) throw error("bad_denominator", "denominator must be >= 1");
  Int acc = 0;
  const auto& factors = spec.invariant_factors();
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const Int n = factors[j];
    if (den % n != 0) {
      throw error("bad_denominator",
                  "denominator is not a common multiple of the factors");
    }
    const Int t = detail::checked_mul(gamma.coords[j], x.coords[j]) % n;
    acc = (acc + t * (den / n)) % den;  // t*(den/n) < den
  }
  return acc;
}

Rotation pairing(const GroupSpec& spec, const GroupElement& gamma,
                 const GroupElement& x) {
  const Int e = spec.exponent();
  return Rotation::of(scaled_pairing(spec, gamma, x, e), e);
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec,
                                             Int max_enumeration) {
  if (spec.order() > max_enumeration) {
    throw error("enumeration_bound_exceeded",
                "group order " + std::to_string(spec.order()) +
                    " exceeds the enumeration bound " +
                    std::to_string(max_enumeration));
  }
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(spec.order()));
  for (Int i = 0; i < spec.order(); ++i) out.push_back(spec.element_at(i));
  return out;
}

}  // namespace th
