#include "th/transversal.hpp"

#include <algorithm>

namespace th {
namespace {

void require_same_parent(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b)) {
    throw error("parent_mismatch", "operands live in different groups");
  }
}

std::vector<GroupElement> sorted_reps(const QuotientMap& q, const PointSet& s) {
  std::vector<GroupElement> reps;
  reps.reserve(s.size());
  for (const GroupElement& p : s.points()) reps.push_back(q.canonical_rep(p));
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace

PointSet PointSet::of(const GroupSpec& parent,
                      std::vector<GroupElement> points) {
  for (const GroupElement& p : points) parent.require_valid(p);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  PointSet s;
  s.parent_ = parent;
  s.points_ = std::move(points);
  return s;
}

bool PointSet::contains(const GroupElement& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

const GroupElement& CrossSection::image(const GroupElement& rep) const {
  auto it = std::lower_bound(
      table.begin(), table.end(), rep,
      [](const auto& entry, const GroupElement& key) { return entry.first < key; });
  if (it == table.end() || !(it->first == rep)) {
    throw error("unknown_coset_rep",
                "not a canonical coset representative of this quotient");
  }
  return it->second;
}

bool is_partial_transversal(const QuotientMap& q, const PointSet& s) {
  require_same_parent(q.parent(), s.parent());
  const auto reps = sorted_reps(q, s);
  return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

bool is_transversal(const QuotientMap& q, const PointSet& t) {
  // Injective on cosets and hitting all of them: both Lemma-style conditions
  // reduce to canonical_rep being a bijection onto the representatives.
  return static_cast<Int>(t.size()) == q.index() && is_partial_transversal(q, t);
}

PointSet canonical_transversal(const QuotientMap& q, Int max_enumeration) {
  return PointSet::of(q.parent(), q.representatives(max_enumeration));
}

PointSet merge_transversal(const QuotientMap& q, const PointSet& s,
                           const PointSet& r) {
  if (!is_partial_transversal(q, s)) {
    throw error("s_not_partial_transversal",
                "s places two points in one coset");
  }
  if (!is_transversal(q, r)) {
    throw error("r_not_transversal", "r is not a transversal");
  }
  const auto covered = sorted_reps(q, s);
  std::vector<GroupElement> merged = s.points();
  for (const GroupElement& p : r.points()) {
    if (!std::binary_search(covered.begin(), covered.end(),
                            q.canonical_rep(p))) {
      merged.push_back(p);
    }
  }
  return PointSet::of(q.parent(), std::move(merged));
}

CrossSection cross_section(const QuotientMap& q, const PointSet& t) {
  if (!is_transversal(q, t)) {
    throw error("not_a_transversal", "cross sections require a transversal");
  }
  std::vector<std::pair<GroupElement, GroupElement>> table;
  table.reserve(t.size());
  for (const GroupElement& p : t.points()) {
    table.emplace_back(q.canonical_rep(p), p);
  }
  std::sort(table.begin(), table.end());
  return CrossSection{q, std::move(table)};
}

}  // namespace th
