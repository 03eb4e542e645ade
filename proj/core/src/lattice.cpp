#include "th/lattice.hpp"

#include <cstdlib>
#include <limits>
#include <vector>

namespace th {
namespace {

using detail::checked_mul;
using detail::checked_sub;
using detail::floor_div;

// row dst -= q * row src
void row_op(IntMat& m, Eigen::Index dst, Eigen::Index src, Int q) {
  if (q == 0) return;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    m(dst, j) = checked_sub(m(dst, j), checked_mul(q, m(src, j)));
  }
}

// col dst -= q * col src
void col_op(IntMat& m, Eigen::Index dst, Eigen::Index src, Int q) {
  if (q == 0) return;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    m(i, dst) = checked_sub(m(i, dst), checked_mul(q, m(i, src)));
  }
}

}  // namespace

IntMat hermite_normal_form(IntMat a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index pivot = 0;
  for (Eigen::Index col = 0; col < cols && pivot < rows; ++col) {
    // Euclidean elimination below the pivot slot in this column.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = pivot; i < rows; ++i) {
        if (a(i, col) != 0 &&
            (best < 0 || std::abs(a(i, col)) < std::abs(a(best, col)))) {
          best = i;
        }
      }
      if (best < 0) break;  // column already zero below the pivot slot
      if (best != pivot) a.row(pivot).swap(a.row(best));
      if (a(pivot, col) < 0) a.row(pivot) = -a.row(pivot);
      bool clean = true;
      for (Eigen::Index i = pivot + 1; i < rows; ++i) {
        if (a(i, col) == 0) continue;
        row_op(a, i, pivot, floor_div(a(i, col), a(pivot, col)));
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(pivot, col) != 0) {
      // Reduce the entries above the pivot into [0, pivot).
      for (Eigen::Index k = 0; k < pivot; ++k) {
        row_op(a, k, pivot, floor_div(a(k, col), a(pivot, col)));
      }
      ++pivot;
    }
  }
  return a.topRows(pivot);
}

SmithDecomposition smith_normal_form(const IntMat& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  SmithDecomposition d{m, IntMat::Identity(rows, rows),
                       IntMat::Identity(cols, cols)};
  IntMat& s = d.s;
  const Eigen::Index n = std::min(rows, cols);

  Eigen::Index t = 0;
  while (t < n) {
    // Move the smallest nonzero entry of the trailing submatrix to (t,t).
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i) {
      for (Eigen::Index j = t; j < cols; ++j) {
        if (s(i, j) != 0 &&
            (pi < 0 || std::abs(s(i, j)) < std::abs(s(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;  // trailing submatrix is zero
    if (pi != t) {
      s.row(t).swap(s.row(pi));
      d.u.row(t).swap(d.u.row(pi));
    }
    if (pj != t) {
      s.col(t).swap(s.col(pj));
      d.v.col(t).swap(d.v.col(pj));
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      d.u.row(t) = -d.u.row(t);
    }

    bool reduced = true;
    for (Eigen::Index i = t + 1; i < rows; ++i) {
      if (s(i, t) == 0) continue;
      const Int q = floor_div(s(i, t), s(t, t));
      row_op(s, i, t, q);
      row_op(d.u, i, t, q);
      if (s(i, t) != 0) reduced = false;
    }
    for (Eigen::Index j = t + 1; j < cols; ++j) {
      if (s(t, j) == 0) continue;
      const Int q = floor_div(s(t, j), s(t, t));
      col_op(s, j, t, q);
      col_op(d.v, j, t, q);
      if (s(t, j) != 0) reduced = false;
    }
    if (!reduced) continue;

    // Enforce the divisibility chain: fold a bad row into row t and redo.
    bool divides = true;
    for (Eigen::Index i = t + 1; i < rows && divides; ++i) {
      for (Eigen::Index j = t + 1; j < cols && divides; ++j) {
        if (s(i, j) % s(t, t) != 0) {
          row_op(s, t, i, Int{-1});
          row_op(d.u, t, i, Int{-1});
          divides = false;
        }
      }
    }
    if (divides) ++t;
  }
  return d;
}

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) {
    throw error("not_square", "determinant of a non-square matrix");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  // Bareiss elimination in 128-bit intermediates; entries of unimodular
  // transforms can exceed what 64-bit products tolerate.
  using Wide = __int128;
  std::vector<Wide> w(static_cast<std::size_t>(n * n));
  auto at = [&](Eigen::Index i, Eigen::Index j) -> Wide& {
    return w[static_cast<std::size_t>(i * n + j)];
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) at(i, j) = m(i, j);
  }
  Int sign = 1;
  Wide prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (at(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      for (Eigen::Index j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  const Wide det = sign * at(n - 1, n - 1);
  if (det > std::numeric_limits<Int>::max() ||
      det < std::numeric_limits<Int>::min()) {
    throw error("integer_overflow", "determinant exceeds 64 bits");
  }
  return static_cast<Int>(det);
}

}  // namespace th
