#include "th/sampling.hpp"

#include <algorithm>
#include <map>

#include "unit_cache.hpp"

namespace th {
namespace {

void require_same_parent(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b)) {
    throw error("parent_mismatch", "operands live in different groups");
  }
}

void require_enumerable(const GroupSpec& spec, Int max_enumeration) {
  if (spec.order() > max_enumeration) {
    throw error("enumeration_bound_exceeded",
                "group order " + std::to_string(spec.order()) +
                    " exceeds the enumeration bound " +
                    std::to_string(max_enumeration));
  }
}

std::string coords_text(const GroupElement& x) {
  std::string s = "(";
  for (std::size_t j = 0; j < x.coords.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(x.coords[j]);
  }
  return s + ")";
}

}  // namespace

Signal make_signal(const GroupSpec& group,
                   std::vector<std::complex<double>> values) {
  if (static_cast<Int>(values.size()) != group.order()) {
    throw error("size_mismatch",
                "signal needs one value per group element, in "
                "lexicographic order");
  }
  return Signal{group, std::move(values)};
}

Signal zero_signal(const GroupSpec& group) {
  return Signal{group, std::vector<std::complex<double>>(
                           static_cast<std::size_t>(group.order()), 0.0)};
}

Signal synthesize(
    const GroupSpec& group,
    const std::vector<std::pair<GroupElement, std::complex<double>>>& coefficients,
    Int max_enumeration) {
  require_enumerable(group, max_enumeration);
  Signal x = zero_signal(group);
  const detail::UnitCache cache(group.exponent());
  for (Int i = 0; i < group.order(); ++i) {
    const GroupElement g = group.element_at(i);
    std::complex<double> v = 0.0;
    for (const auto& [delta, c] : coefficients) {
      v += c * cache.at(scaled_pairing(group, delta, g, cache.den()));
    }
    x.values[static_cast<std::size_t>(i)] = v;
  }
  return x;
}

Signal dft(const Signal& x, Int max_enumeration) {
  const GroupSpec& group = x.group;
  require_enumerable(group, max_enumeration);
  if (static_cast<Int>(x.values.size()) != group.order()) {
    throw error("size_mismatch", "signal length does not match the group");
  }
  Signal out = zero_signal(group);
  const detail::UnitCache cache(group.exponent());
  for (Int k = 0; k < group.order(); ++k) {
    const GroupElement gamma = group.element_at(k);
    std::complex<double> acc = 0.0;
    for (Int i = 0; i < group.order(); ++i) {
      const GroupElement g = group.element_at(i);
      acc += x.values[static_cast<std::size_t>(i)] *
             cache.at_conj(scaled_pairing(group, gamma, g, cache.den()));
    }
    out.values[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

Signal idft(const Signal& x, Int max_enumeration) {
  const GroupSpec& group = x.group;
  require_enumerable(group, max_enumeration);
  if (static_cast<Int>(x.values.size()) != group.order()) {
    throw error("size_mismatch", "signal length does not match the group");
  }
  Signal out = zero_signal(group);
  const detail::UnitCache cache(group.exponent());
  const double norm = 1.0 / static_cast<double>(group.order());
  for (Int i = 0; i < group.order(); ++i) {
    const GroupElement g = group.element_at(i);
    std::complex<double> acc = 0.0;
    for (Int k = 0; k < group.order(); ++k) {
      const GroupElement gamma = group.element_at(k);
      acc += x.values[static_cast<std::size_t>(k)] *
             cache.at(scaled_pairing(group, gamma, g, cache.den()));
    }
    out.values[static_cast<std::size_t>(i)] = norm * acc;
  }
  return out;
}

std::vector<std::complex<double>> sample_on_subgroup(const Signal& x,
                                                     const Subgroup& h,
                                                     Int max_enumeration) {
  require_same_parent(x.group, h.parent());
  if (static_cast<Int>(x.values.size()) != x.group.order()) {
    throw error("size_mismatch", "signal length does not match the group");
  }
  std::vector<std::complex<double>> samples;
  for (const GroupElement& y : h.elements(max_enumeration)) {
    samples.push_back(
        x.values[static_cast<std::size_t>(x.group.index_of(y))]);
  }
  return samples;
}

std::optional<std::tuple<GroupElement, GroupElement, GroupElement>>
spectrum_collision(const QuotientMap& q, const PointSet& spectrum) {
  require_same_parent(q.parent(), spectrum.parent());
  std::map<GroupElement, GroupElement> first_by_rep;
  for (const GroupElement& p : spectrum.points()) {
    const GroupElement rep = q.canonical_rep(p);
    auto [it, inserted] = first_by_rep.emplace(rep, p);
    if (!inserted) return std::make_tuple(rep, it->second, p);
  }
  return std::nullopt;
}

namespace {

/// Folded spectrum values: the subgroup DFT of the samples, one value per
/// spectrum point, equal to the alias sum over that point's Λ-coset.
std::vector<std::complex<double>> unfold_coefficients(
    const std::vector<std::complex<double>>& samples, const Subgroup& h,
    const PointSet& d, Int max_enumeration) {
  const GroupSpec& spec = h.parent();
  const QuotientMap q = quotient(annihilator(h));
  if (auto collision = spectrum_collision(q, d)) {
    const auto& [rep, p1, p2] = *collision;
    throw error("spectrum_not_partial_transversal",
                "spectrum points " + coords_text(p1) + " and " +
                    coords_text(p2) + " share the coset of " +
                    coords_text(rep) + "; reconstruction is ambiguous");
  }
  if (static_cast<Int>(samples.size()) != h.order()) {
    throw error("sample_count_mismatch",
                "expected " + std::to_string(h.order()) + " samples, got " +
                    std::to_string(samples.size()));
  }
  const std::vector<GroupElement> ys = h.elements(max_enumeration);
  const detail::UnitCache cache(spec.exponent());
  const double norm = 1.0 / static_cast<double>(h.order());
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(d.size());
  for (const GroupElement& delta : d.points()) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < ys.size(); ++k) {
      acc += samples[k] *
             cache.at_conj(scaled_pairing(spec, delta, ys[k], cache.den()));
    }
    coeffs.push_back(norm * acc);
  }
  return coeffs;
}

}  // namespace

Signal reconstruct(const std::vector<std::complex<double>>& samples,
                   const Subgroup& h, const PointSet& d, Int max_enumeration) {
  require_same_parent(h.parent(), d.parent());
  const auto coeffs = unfold_coefficients(samples, h, d, max_enumeration);
  std::vector<std::pair<GroupElement, std::complex<double>>> spectrum;
  spectrum.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    spectrum.emplace_back(d.points()[i], coeffs[i]);
  }
  return synthesize(h.parent(), spectrum, max_enumeration);
}

Signal interpolation_kernel(const Subgroup& h, const PointSet& d,
                            Int max_enumeration) {
  require_same_parent(h.parent(), d.parent());
  const QuotientMap q = quotient(annihilator(h));
  if (auto collision = spectrum_collision(q, d)) {
    const auto& [rep, p1, p2] = *collision;
    throw error("spectrum_not_partial_transversal",
                "spectrum points " + coords_text(p1) + " and " +
                    coords_text(p2) + " share the coset of " +
                    coords_text(rep));
  }
  const double norm = 1.0 / static_cast<double>(h.order());
  std::vector<std::pair<GroupElement, std::complex<double>>> spectrum;
  spectrum.reserve(d.size());
  for (const GroupElement& delta : d.points()) {
    spectrum.emplace_back(delta, norm);
  }
  return synthesize(h.parent(), spectrum, max_enumeration);
}

Signal reconstruct_with_kernel(const std::vector<std::complex<double>>& samples,
                               const Subgroup& h, const PointSet& d,
                               Int max_enumeration) {
  require_same_parent(h.parent(), d.parent());
  const Signal phi = interpolation_kernel(h, d, max_enumeration);
  if (static_cast<Int>(samples.size()) != h.order()) {
    throw error("sample_count_mismatch",
                "expected " + std::to_string(h.order()) + " samples, got " +
                    std::to_string(samples.size()));
  }
  const GroupSpec& spec = h.parent();
  const std::vector<GroupElement> ys = h.elements(max_enumeration);
  Signal x = zero_signal(spec);
  for (Int i = 0; i < spec.order(); ++i) {
    const GroupElement g = spec.element_at(i);
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < ys.size(); ++k) {
      const Int shift = spec.index_of(spec.sub(g, ys[k]));
      acc += samples[k] * phi.values[static_cast<std::size_t>(shift)];
    }
    x.values[static_cast<std::size_t>(i)] = acc;
  }
  return x;
}

std::optional<AliasingWitness> aliasing_witness(const Subgroup& h,
                                                const PointSet& d,
                                                Int max_enumeration) {
  require_same_parent(h.parent(), d.parent());
  const QuotientMap q = quotient(annihilator(h));
  const auto collision = spectrum_collision(q, d);
  if (!collision) return std::nullopt;
  const auto& [rep, p1, p2] = *collision;

  AliasingWitness w;
  w.first_frequency = p1;
  w.second_frequency = p2;
  w.coset_rep = rep;
  w.first = synthesize(h.parent(), {{p1, 1.0}}, max_enumeration);
  w.second = synthesize(h.parent(), {{p2, 1.0}}, max_enumeration);
  double diff = 0.0;
  for (const GroupElement& y : h.elements(max_enumeration)) {
    const auto i = static_cast<std::size_t>(h.parent().index_of(y));
    diff = std::max(diff, std::abs(w.first.values[i] - w.second.values[i]));
  }
  w.max_sample_difference = diff;
  return w;
}

}  // namespace th
