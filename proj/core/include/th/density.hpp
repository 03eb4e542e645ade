#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "th/measure.hpp"

namespace th {

inline constexpr double kDefaultRankTolerance = 1e-9;

/// Restrictions of the trigonometric H-polynomial basis to a finite support:
/// entry (i,k) = ⟨support_i, frequency_k⟩. Each entry is also kept as an
/// exact phase numerator over the common denominator phase_den (the group
/// exponent), so two rows are compared exactly: they coincide iff the support
/// points lie in the same Λ-coset.
struct CharacterMatrix {
  std::vector<GroupElement> support;      // row labels, lexicographic
  std::vector<GroupElement> frequencies;  // column labels: elements of H
  Eigen::MatrixXcd values;                // unit-modulus entries
  IntMat phases;                          // exact numerators mod phase_den
  Int phase_den = 1;

  bool rows_equal(Eigen::Index i, Eigen::Index j) const;
};

CharacterMatrix character_matrix(const DiscreteMeasure& m, const Subgroup& h,
                                 Int max_enumeration = kDefaultMaxEnumeration);
CharacterMatrix character_matrix(const std::vector<GroupElement>& support,
                                 const Subgroup& h,
                                 Int max_enumeration = kDefaultMaxEnumeration);

enum class DensityMethod : std::uint8_t { rank, coset };

/// Outcome of a density decision. Both oracles populate rank with the number
/// of independent character rows (for the coset oracle this is the number of
/// distinct cosets hit), so dense == (rank == support_size) either way.
/// witness carries the concentration set when dense; when not dense the rank
/// oracle reports a pair of support points with exactly equal rows, and the
/// coset oracle reports the violating coset representative.
struct DensityVerdict {
  bool dense = false;
  DensityMethod method = DensityMethod::rank;
  Int rank = 0;
  Int support_size = 0;
  PointSet witness;
  std::optional<GroupElement> violating_rep;
};

/// Analytic oracle: dense iff the character matrix has full row rank,
/// decided by singular values with threshold rel_tol · σ_max. The verdict is
/// independent of alpha (a finite-dimensional subspace is closed in every
/// L^α metric); alpha is validated and otherwise ignored.
DensityVerdict is_dense_rank(const DiscreteMeasure& m, const Subgroup& h,
                             double alpha = 2.0,
                             double rel_tol = kDefaultRankTolerance,
                             Int max_enumeration = kDefaultMaxEnumeration);

/// Combinatorial oracle: dense iff m is concentrated on a transversal.
/// Exact, no floating point. q must be the quotient by annihilator(h).
DensityVerdict is_dense_coset(const DiscreteMeasure& m, const QuotientMap& q);

struct ApproxOptions {
  double objective_tol = 1e-10;   // stop when the objective decrease is below
  int max_iterations = 400;       // per descent
  int multistarts = 8;            // alpha < 1 only
  std::uint64_t seed = 0x5eed1e5;  // multistart perturbations
  double residual_floor = 1e-12;  // IRLS reweighting clip
  Int max_enumeration = kDefaultMaxEnumeration;
};

struct ApproxResult {
  double error = 0.0;     // (Σ w_i |f_i − p_i|^α)^{min(1,1/α)}
  bool heuristic = false; // true for α < 1: upper bound from local descent
  bool converged = true;
  int iterations = 0;
};

/// Best L^α(μ) approximation distance from f (given on exactly the support
/// of m, in lexicographic support order) to the trigonometric H-polynomials.
/// α = 2 is exact weighted least squares; α in [1,∞) uses damped IRLS with
/// monotone line search; α in (0,1) is nonconvex and returns a multistart
/// upper bound flagged heuristic.
ApproxResult best_approximation_error(const DiscreteMeasure& m,
                                      const Subgroup& h,
                                      const std::vector<std::complex<double>>& f,
                                      double alpha,
                                      const ApproxOptions& options = {});

struct OverlapReport {
  GroupElement lambda;
  GroupElement kappa;
  PointSet points;  // representatives shared by the two translated supports
};

struct ExtractResult {
  bool success = false;
  PointSet concentration_set;           // D, on success
  std::vector<OverlapReport> overlaps;  // every nonempty T_λκ, on failure
};

/// The concentration set D, built the way the countable-Λ proof builds it:
/// against the canonical transversal T, each atom of m at γ contributes its
/// representative to T_λ where λ = γ − rep(γ); D = ⋃_λ (λ + T_λ) when all
/// pairwise overlaps T_λκ are empty, else every nonempty overlap is reported.
/// Succeeds iff m is concentrated on a transversal; on success D carries the
/// full mass of m and is a partial transversal.
ExtractResult extract_concentration_set(const DiscreteMeasure& m,
                                        const QuotientMap& q);

struct NullSpaceResult {
  Int dimension = 0;  // support_size − numerical rank
  bool support_is_partial_transversal = false;
};

/// Dimension of the left null space of the character matrix over the given
/// support: the space of complex measures on the support annihilating every
/// frequency of h. Zero whenever the support is a partial transversal.
NullSpaceResult annihilating_null_space(const PointSet& nu_support,
                                        const Subgroup& h,
                                        const QuotientMap& q,
                                        double rel_tol = kDefaultRankTolerance,
                                        Int max_enumeration = kDefaultMaxEnumeration);

}  // namespace th
