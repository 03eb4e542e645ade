#include "th/subgroup.hpp"

#include <algorithm>
#include <numeric>

namespace th {
namespace {

IntMat diag_lattice(const GroupSpec& spec) {
  const auto r = static_cast<Eigen::Index>(spec.rank());
  IntMat d = IntMat::Zero(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    d(i, i) = spec.invariant_factors()[static_cast<std::size_t>(i)];
  }
  return d;
}

Int basis_diagonal_product(const IntMat& basis) {
  Int p = 1;
  for (Eigen::Index i = 0; i < basis.rows(); ++i) {
    p = detail::checked_mul(p, basis(i, i));
  }
  return p;
}

}  // namespace

Subgroup::Subgroup(GroupSpec parent, IntMat basis)
    : parent_(std::move(parent)), basis_(std::move(basis)) {
  const auto r = static_cast<Eigen::Index>(parent_.rank());
  if (basis_.rows() != r || basis_.cols() != r) {
    throw error("internal", "subgroup basis is not square of full rank");
  }
  order_ = parent_.order() / basis_diagonal_product(basis_);
}

Subgroup Subgroup::from_generators(const GroupSpec& parent,
                                   const std::vector<GroupElement>& generators) {
  const auto r = static_cast<Eigen::Index>(parent.rank());
  IntMat rows(static_cast<Eigen::Index>(generators.size()) + r, r);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    parent.require_valid(generators[i]);
    for (Eigen::Index j = 0; j < r; ++j) {
      rows(static_cast<Eigen::Index>(i), j) =
          generators[i].coords[static_cast<std::size_t>(j)];
    }
  }
  rows.bottomRows(r) = diag_lattice(parent);
  return Subgroup(parent, hermite_normal_form(std::move(rows)));
}

Subgroup Subgroup::trivial(const GroupSpec& parent) {
  return Subgroup(parent, diag_lattice(parent));
}

Subgroup Subgroup::full(const GroupSpec& parent) {
  const auto r = static_cast<Eigen::Index>(parent.rank());
  return Subgroup(parent, IntMat::Identity(r, r));
}

bool Subgroup::contains(const GroupElement& x) const {
  parent_.require_valid(x);
  const auto r = basis_.rows();
  IntVec v(r);
  for (Eigen::Index j = 0; j < r; ++j) {
    v(j) = x.coords[static_cast<std::size_t>(j)];
  }
  for (Eigen::Index i = 0; i < r; ++i) {
    if (v(i) % basis_(i, i) != 0) return false;
    const Int q = v(i) / basis_(i, i);
    if (q != 0) {
      for (Eigen::Index j = i; j < r; ++j) {
        v(j) = detail::checked_sub(v(j), detail::checked_mul(q, basis_(i, j)));
      }
    }
  }
  return true;  // triangular descent zeroes every coordinate
}

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> gens;
  const auto r = basis_.rows();
  for (Eigen::Index i = 0; i < r; ++i) {
    std::vector<Int> coords(static_cast<std::size_t>(r));
    bool nonzero = false;
    for (Eigen::Index j = 0; j < r; ++j) {
      coords[static_cast<std::size_t>(j)] = detail::pos_mod(
          basis_(i, j), parent_.invariant_factors()[static_cast<std::size_t>(j)]);
      nonzero = nonzero || coords[static_cast<std::size_t>(j)] != 0;
    }
    if (nonzero) gens.push_back(GroupElement{std::move(coords)});
  }
  return gens;
}

std::vector<GroupElement> Subgroup::elements(Int max_enumeration) const {
  if (order_ > max_enumeration) {
    throw error("enumeration_bound_exceeded",
                "subgroup order " + std::to_string(order_) +
                    " exceeds the enumeration bound " +
                    std::to_string(max_enumeration));
  }
  const auto r = basis_.rows();
  // Coefficient y_i of basis row i ranges over [0, n_i / b_ii); every element
  // of the subgroup arises exactly once as Σ y_i row_i mod n.
  std::vector<Int> radix(static_cast<std::size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) {
    radix[static_cast<std::size_t>(i)] =
        parent_.invariant_factors()[static_cast<std::size_t>(i)] / basis_(i, i);
  }
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  std::vector<Int> y(static_cast<std::size_t>(r), 0);
  for (Int count = 0; count < order_; ++count) {
    std::vector<Int> coords(static_cast<std::size_t>(r), 0);
    for (Eigen::Index i = 0; i < r; ++i) {
      const Int yi = y[static_cast<std::size_t>(i)];
      if (yi == 0) continue;
      for (Eigen::Index j = i; j < r; ++j) {
        coords[static_cast<std::size_t>(j)] = detail::checked_add(
            coords[static_cast<std::size_t>(j)],
            detail::checked_mul(yi, basis_(i, j)));
      }
    }
    out.push_back(parent_.reduce(std::move(coords)));
    for (Eigen::Index i = r; i-- > 0;) {
      auto& yi = y[static_cast<std::size_t>(i)];
      if (++yi < radix[static_cast<std::size_t>(i)]) break;
      yi = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup subgroup_from_generators(const GroupSpec& spec,
                                  const std::vector<GroupElement>& generators) {
  return Subgroup::from_generators(spec, generators);
}

Subgroup annihilator(const Subgroup& h) {
  const GroupSpec& spec = h.parent();
  const auto r = static_cast<Eigen::Index>(spec.rank());
  const Int e = spec.exponent();
  const auto& factors = spec.invariant_factors();

  // γ annihilates h iff C·γ ≡ 0 (mod e) where C scales h's basis rows by
  // e/n_j per column. Diagonalize C = u⁻¹ s v⁻¹; with γ = v·h' the system
  // becomes s_ii h'_i ≡ 0 (mod e), so h'_i runs over multiples of
  // e / gcd(s_ii, e) and the solution lattice is spanned by those columns.
  IntMat c(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) {
      const Int n = factors[static_cast<std::size_t>(j)];
      const Int b = detail::pos_mod(h.basis()(i, j), n);
      c(i, j) = detail::checked_mul(b, e / n) % e;
    }
  }
  const SmithDecomposition snf = smith_normal_form(c);

  std::vector<GroupElement> gens;
  for (Eigen::Index i = 0; i < r; ++i) {
    const Int m = e / std::gcd(snf.s(i, i), e);
    std::vector<Int> coords(static_cast<std::size_t>(r));
    for (Eigen::Index j = 0; j < r; ++j) {
      const Int n = factors[static_cast<std::size_t>(j)];
      coords[static_cast<std::size_t>(j)] =
          detail::pos_mod(detail::checked_mul(m, snf.v(j, i)) % n, n);
    }
    gens.push_back(GroupElement{std::move(coords)});
  }
  return Subgroup::from_generators(spec, gens);
}

std::vector<GroupElement> enumerate_elements(const Subgroup& h,
                                             Int max_enumeration) {
  return h.elements(max_enumeration);
}

std::vector<Subgroup> all_subgroups(const GroupSpec& spec) {
  const auto r = static_cast<Eigen::Index>(spec.rank());
  const auto& factors = spec.invariant_factors();

  std::vector<std::vector<Int>> divisors(static_cast<std::size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) {
    const Int n = factors[static_cast<std::size_t>(i)];
    for (Int d = 1; d <= n; ++d) {
      if (n % d == 0) divisors[static_cast<std::size_t>(i)].push_back(d);
    }
  }

  // A candidate basis must contain diag(n); membership of each n_i e_i is
  // checked by the same triangular descent Subgroup::contains uses.
  auto contains_diag = [&](const IntMat& b) {
    for (Eigen::Index i = 0; i < r; ++i) {
      IntVec v = IntVec::Zero(r);
      v(i) = factors[static_cast<std::size_t>(i)];
      for (Eigen::Index k = 0; k < r; ++k) {
        if (v(k) % b(k, k) != 0) return false;
        const Int q = v(k) / b(k, k);
        if (q != 0) {
          for (Eigen::Index j = k; j < r; ++j) {
            v(j) = detail::checked_sub(v(j), detail::checked_mul(q, b(k, j)));
          }
        }
      }
    }
    return true;
  };

  std::vector<Subgroup> out;
  IntMat b = IntMat::Zero(r, r);
  // Fill column by column: pivot d_col | n_col, entries above in [0, d_col).
  auto emit = [&] {
    std::vector<GroupElement> gens;
    for (Eigen::Index i = 0; i < r; ++i) {
      std::vector<Int> coords(static_cast<std::size_t>(r));
      for (Eigen::Index j = 0; j < r; ++j) {
        coords[static_cast<std::size_t>(j)] = detail::pos_mod(
            b(i, j), factors[static_cast<std::size_t>(j)]);
      }
      gens.push_back(GroupElement{std::move(coords)});
    }
    out.push_back(Subgroup::from_generators(spec, gens));
  };
  auto fill = [&](auto&& self, Eigen::Index col) -> void {
    if (col == r) {
      if (contains_diag(b)) emit();
      return;
    }
    for (Int d : divisors[static_cast<std::size_t>(col)]) {
      b(col, col) = d;
      std::vector<Int> above(static_cast<std::size_t>(col), 0);
      for (;;) {
        for (Eigen::Index k = 0; k < col; ++k) {
          b(k, col) = above[static_cast<std::size_t>(k)];
        }
        self(self, col + 1);
        Eigen::Index k = col;
        bool carried = false;
        while (k-- > 0) {
          auto& a = above[static_cast<std::size_t>(k)];
          if (++a < d) {
            carried = true;
            break;
          }
          a = 0;
        }
        if (!carried) break;
      }
    }
    b(col, col) = 0;
    for (Eigen::Index k = 0; k < col; ++k) b(k, col) = 0;
  };
  fill(fill, 0);

  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b2) {
    for (Eigen::Index i = 0; i < a.basis().rows(); ++i) {
      for (Eigen::Index j = 0; j < a.basis().cols(); ++j) {
        if (a.basis()(i, j) != b2.basis()(i, j)) {
          return a.basis()(i, j) < b2.basis()(i, j);
        }
      }
    }
    return false;
  });
  return out;
}

}  // namespace th
