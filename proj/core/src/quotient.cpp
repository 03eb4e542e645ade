#include "th/quotient.hpp"

namespace th {

QuotientMap::QuotientMap(GroupSpec parent, Subgroup lambda,
                         GroupSpec quotient_spec, Int index)
    : parent_(std::move(parent)),
      lambda_(std::move(lambda)),
      quotient_spec_(std::move(quotient_spec)),
      index_(index) {}

QuotientMap quotient(const Subgroup& lambda) {
  const GroupSpec& spec = lambda.parent();
  const auto r = static_cast<Eigen::Index>(spec.rank());

  IntMat stacked(2 * r, r);
  stacked.setZero();
  for (Eigen::Index i = 0; i < r; ++i) {
    stacked(i, i) = spec.invariant_factors()[static_cast<std::size_t>(i)];
  }
  stacked.bottomRows(r) = lambda.basis();
  const SmithDecomposition snf = smith_normal_form(stacked);

  std::vector<Int> quotient_factors;
  for (Eigen::Index i = 0; i < r; ++i) quotient_factors.push_back(snf.s(i, i));

  Int index = 1;
  for (Eigen::Index i = 0; i < r; ++i) {
    index = detail::checked_mul(index, lambda.basis()(i, i));
  }
  return QuotientMap(spec, lambda, GroupSpec(std::move(quotient_factors)),
                     index);
}

GroupElement QuotientMap::canonical_rep(const GroupElement& gamma) const {
  parent_.require_valid(gamma);
  const IntMat& b = lambda_.basis();
  const auto r = b.rows();
  std::vector<Int> g = gamma.coords;
  // Triangular descent: after step i, g_i is the least nonnegative value
  // reachable in the coset, so the result is the lexicographic minimum.
  for (Eigen::Index i = 0; i < r; ++i) {
    const Int q = detail::floor_div(g[static_cast<std::size_t>(i)], b(i, i));
    if (q != 0) {
      for (Eigen::Index j = i; j < r; ++j) {
        g[static_cast<std::size_t>(j)] = detail::checked_sub(
            g[static_cast<std::size_t>(j)], detail::checked_mul(q, b(i, j)));
      }
    }
  }
  return GroupElement{std::move(g)};
}

bool QuotientMap::same_coset(const GroupElement& a,
                             const GroupElement& b) const {
  return lambda_.contains(parent_.sub(a, b));
}

std::vector<GroupElement> QuotientMap::representatives(
    Int max_enumeration) const {
  if (index_ > max_enumeration) {
    throw error("enumeration_bound_exceeded",
                "coset count " + std::to_string(index_) +
                    " exceeds the enumeration bound " +
                    std::to_string(max_enumeration));
  }
  const IntMat& b = lambda_.basis();
  const auto r = b.rows();
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(index_));
  std::vector<Int> c(static_cast<std::size_t>(r), 0);
  for (Int count = 0; count < index_; ++count) {
    out.push_back(GroupElement{c});
    for (Eigen::Index i = r; i-- > 0;) {
      auto& ci = c[static_cast<std::size_t>(i)];
      if (++ci < b(i, i)) break;
      ci = 0;
    }
  }
  return out;
}

}  // namespace th
