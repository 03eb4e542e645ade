#pragma once

#include <Eigen/Core>

#include "th/common.hpp"

namespace th {

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// Row-style Hermite normal form of the lattice spanned by the rows of m.
/// Returns one row per pivot (zero rows are dropped). Pivots are positive,
/// each strictly to the right of the one above, and every entry above a
/// pivot lies in [0, pivot). This is the unique canonical basis of the row
/// lattice, so lattice equality is matrix equality.
IntMat hermite_normal_form(IntMat m);

/// s = u * m * v with u, v unimodular, s diagonal with nonnegative entries
/// forming a divisibility chain s(0,0) | s(1,1) | ...
struct SmithDecomposition {
  IntMat s;
  IntMat u;
  IntMat v;
};

SmithDecomposition smith_normal_form(const IntMat& m);

/// Exact determinant of a square integer matrix (Bareiss elimination).
Int determinant(const IntMat& m);

}  // namespace th
