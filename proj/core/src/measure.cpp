#include "th/measure.hpp"

#include <algorithm>
#include <map>

namespace th {
namespace {

void require_same_parent(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b)) {
    throw error("parent_mismatch", "operands live in different groups");
  }
}

void require_nonnegative(const DiscreteMeasure& m) {
  if (m.kind() != WeightKind::nonnegative) {
    throw error("wrong_kind", "operation requires a nonnegative measure");
  }
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(GroupSpec parent, WeightKind kind,
                                 std::vector<Atom> atoms)
    : parent_(std::move(parent)), kind_(kind), atoms_(std::move(atoms)) {
  for (const Atom& a : atoms_) {
    parent_.require_valid(a.point);
    if (a.weight == 0.0) {
      throw error("bad_weight", "zero-weight atoms are not representable");
    }
    if (kind_ == WeightKind::nonnegative &&
        (a.weight.imag() != 0.0 || a.weight.real() <= 0.0)) {
      throw error("bad_weight",
                  "nonnegative measures need real weights > 0");
    }
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.point < b.point; });
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    if (atoms_[i - 1].point == atoms_[i].point) {
      throw error("duplicate_atom", "atoms must have pairwise distinct points");
    }
  }
}

DiscreteMeasure DiscreteMeasure::nonnegative(
    const GroupSpec& parent,
    const std::vector<std::pair<GroupElement, double>>& atoms) {
  std::vector<Atom> a;
  a.reserve(atoms.size());
  for (const auto& [p, w] : atoms) a.push_back({p, {w, 0.0}});
  return DiscreteMeasure(parent, WeightKind::nonnegative, std::move(a));
}

DiscreteMeasure DiscreteMeasure::complex_valued(
    const GroupSpec& parent,
    const std::vector<std::pair<GroupElement, std::complex<double>>>& atoms) {
  std::vector<Atom> a;
  a.reserve(atoms.size());
  for (const auto& [p, w] : atoms) a.push_back({p, w});
  return DiscreteMeasure(parent, WeightKind::complex_valued, std::move(a));
}

DiscreteMeasure DiscreteMeasure::zero(const GroupSpec& parent,
                                      WeightKind kind) {
  return DiscreteMeasure(parent, kind, {});
}

DiscreteMeasure DiscreteMeasure::dirac(const GroupSpec& parent,
                                       const GroupElement& x, double weight) {
  return nonnegative(parent, {{x, weight}});
}

std::complex<double> DiscreteMeasure::mass() const {
  std::complex<double> total = 0.0;
  for (const Atom& a : atoms_) total += a.weight;
  return total;
}

PointSet DiscreteMeasure::support() const {
  std::vector<GroupElement> pts;
  pts.reserve(atoms_.size());
  for (const Atom& a : atoms_) pts.push_back(a.point);
  return PointSet::of(parent_, std::move(pts));
}

DiscreteMeasure pushforward(const DiscreteMeasure& m, const QuotientMap& q) {
  require_same_parent(m.parent(), q.parent());
  std::map<GroupElement, std::complex<double>> folded;
  for (const Atom& a : m.atoms()) folded[q.canonical_rep(a.point)] += a.weight;
  std::vector<Atom> atoms;
  for (auto& [rep, w] : folded) {
    if (w == 0.0) continue;  // exact cancellation of a complex measure
    atoms.push_back({rep, w});
  }
  return DiscreteMeasure(m.parent(), m.kind(), std::move(atoms));
}

std::vector<std::pair<GroupElement, DiscreteMeasure>> fibers(
    const DiscreteMeasure& m, const QuotientMap& q) {
  require_same_parent(m.parent(), q.parent());
  require_nonnegative(m);
  std::map<GroupElement, std::vector<Atom>> by_rep;
  for (const Atom& a : m.atoms()) by_rep[q.canonical_rep(a.point)].push_back(a);
  std::vector<std::pair<GroupElement, DiscreteMeasure>> out;
  out.reserve(by_rep.size());
  for (auto& [rep, atoms] : by_rep) {
    out.emplace_back(rep,
                     DiscreteMeasure(m.parent(), m.kind(), std::move(atoms)));
  }
  return out;
}

ConcentrationResult is_concentrated_on_transversal(const DiscreteMeasure& m,
                                                   const QuotientMap& q) {
  require_same_parent(m.parent(), q.parent());
  require_nonnegative(m);
  std::map<GroupElement, int> count;
  for (const Atom& a : m.atoms()) ++count[q.canonical_rep(a.point)];
  for (const auto& [rep, c] : count) {
    if (c >= 2) return {false, PointSet{}, rep};
  }
  return {true, m.support(), std::nullopt};
}

std::complex<double> fourier_coefficient(const DiscreteMeasure& nu,
                                         const Subgroup& h,
                                         const GroupElement& y) {
  require_same_parent(nu.parent(), h.parent());
  if (!h.contains(y)) {
    throw error("y_not_in_subgroup", "frequency y does not lie in h");
  }
  std::complex<double> sum = 0.0;
  for (const Atom& a : nu.atoms()) {
    sum += a.weight * pairing(nu.parent(), a.point, y).unit();
  }
  return sum;
}

DiscreteMeasure translate(const DiscreteMeasure& m, const GroupElement& lambda) {
  m.parent().require_valid(lambda);
  std::vector<Atom> atoms;
  atoms.reserve(m.size());
  for (const Atom& a : m.atoms()) {
    atoms.push_back({m.parent().sub(a.point, lambda), a.weight});
  }
  return DiscreteMeasure(m.parent(), m.kind(), std::move(atoms));
}

DiscreteMeasure restrict_to(const DiscreteMeasure& m, const PointSet& s) {
  require_same_parent(m.parent(), s.parent());
  std::vector<Atom> atoms;
  for (const Atom& a : m.atoms()) {
    if (s.contains(a.point)) atoms.push_back(a);
  }
  return DiscreteMeasure(m.parent(), m.kind(), std::move(atoms));
}

}  // namespace th
