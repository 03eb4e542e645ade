#include "th/density.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <random>

#include "unit_cache.hpp"

namespace th {
namespace {

void require_same_parent(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b)) {
    throw error("parent_mismatch", "operands live in different groups");
  }
}

void require_density_operand(const DiscreteMeasure& m) {
  if (m.kind() != WeightKind::nonnegative) {
    throw error("wrong_kind", "density oracles take nonnegative measures");
  }
  if (m.empty()) {
    throw error("empty_measure", "density in L^alpha of the zero measure is undefined");
  }
}

/// Singular values of m, largest first. The QR factor of the (adjoint)
/// matrix has the same singular values, so the small-side triangular factor
/// feeds a Jacobi SVD regardless of how wide the input is.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd narrow = (m.rows() <= m.cols()) ? m.adjoint() : m;
  const Eigen::Index k = narrow.cols();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(narrow);
  Eigen::MatrixXcd r = qr.matrixQR()
                           .topRows(k)
                           .triangularView<Eigen::Upper>();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r);
  return svd.singularValues();
}

Int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  const Eigen::VectorXd sigma = singular_values(m);
  if (sigma.size() == 0) return 0;
  const double cut = rel_tol * sigma(0);
  Int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cut) ++rank;
  }
  return rank;
}

}  // namespace

bool CharacterMatrix::rows_equal(Eigen::Index i, Eigen::Index j) const {
  return phases.row(i) == phases.row(j);
}

CharacterMatrix character_matrix(const std::vector<GroupElement>& support,
                                 const Subgroup& h, Int max_enumeration) {
  if (support.empty()) {
    throw error("empty_support", "character matrix needs a nonempty support");
  }
  const GroupSpec& spec = h.parent();
  CharacterMatrix cm;
  cm.support = support;
  std::sort(cm.support.begin(), cm.support.end());
  cm.frequencies = h.elements(max_enumeration);
  cm.phase_den = spec.exponent();

  const auto rows = static_cast<Eigen::Index>(cm.support.size());
  const auto cols = static_cast<Eigen::Index>(cm.frequencies.size());
  cm.phases.resize(rows, cols);
  cm.values.resize(rows, cols);
  const detail::UnitCache cache(cm.phase_den);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Int t = scaled_pairing(spec, cm.support[static_cast<std::size_t>(i)],
                                   cm.frequencies[static_cast<std::size_t>(k)],
                                   cm.phase_den);
      cm.phases(i, k) = t;
      cm.values(i, k) = cache.at(t);
    }
  }
  return cm;
}

CharacterMatrix character_matrix(const DiscreteMeasure& m, const Subgroup& h,
                                 Int max_enumeration) {
  require_same_parent(m.parent(), h.parent());
  if (m.empty()) {
    throw error("empty_measure", "character matrix needs a nonempty measure");
  }
  return character_matrix(m.support().points(), h, max_enumeration);
}

DensityVerdict is_dense_rank(const DiscreteMeasure& m, const Subgroup& h,
                             double alpha, double rel_tol,
                             Int max_enumeration) {
  require_same_parent(m.parent(), h.parent());
  require_density_operand(m);
  if (!(alpha > 0.0)) {
    throw error("bad_alpha", "alpha must be positive");
  }
  // The verdict does not depend on alpha: a finite-dimensional subspace is
  // closed in every L^alpha metric, so density reduces to the restriction
  // map being onto, i.e. full row rank.
  const CharacterMatrix cm = character_matrix(m, h, max_enumeration);
  const auto n = static_cast<Int>(cm.support.size());
  const Int rank = numerical_rank(cm.values, rel_tol);

  DensityVerdict v;
  v.method = DensityMethod::rank;
  v.rank = rank;
  v.support_size = n;
  v.dense = rank == n;
  if (v.dense) {
    v.witness = m.support();
  } else {
    // Exhibit a dependent pair: two support points with exactly equal rows.
    const auto rows = static_cast<Eigen::Index>(cm.support.size());
    for (Eigen::Index i = 0; i < rows && v.witness.empty(); ++i) {
      for (Eigen::Index j = i + 1; j < rows; ++j) {
        if (cm.rows_equal(i, j)) {
          v.witness = PointSet::of(
              m.parent(), {cm.support[static_cast<std::size_t>(i)],
                           cm.support[static_cast<std::size_t>(j)]});
          break;
        }
      }
    }
  }
  return v;
}

DensityVerdict is_dense_coset(const DiscreteMeasure& m, const QuotientMap& q) {
  require_same_parent(m.parent(), q.parent());
  require_density_operand(m);
  const ConcentrationResult con = is_concentrated_on_transversal(m, q);

  std::map<GroupElement, int> cosets_hit;
  for (const Atom& a : m.atoms()) ++cosets_hit[q.canonical_rep(a.point)];

  DensityVerdict v;
  v.method = DensityMethod::coset;
  v.rank = static_cast<Int>(cosets_hit.size());
  v.support_size = static_cast<Int>(m.size());
  v.dense = con.concentrated;
  v.witness = con.witness;
  v.violating_rep = con.violating_rep;
  return v;
}

namespace {

using Cplx = std::complex<double>;
using VecC = Eigen::VectorXcd;
using MatC = Eigen::MatrixXcd;

double objective(const Eigen::VectorXd& w, const VecC& f, const MatC& m,
                 const VecC& a, double alpha) {
  const VecC r = f - m * a;
  double total = 0.0;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    total += w(i) * std::pow(std::abs(r(i)), alpha);
  }
  return total;
}

VecC weighted_least_squares(const Eigen::VectorXd& u, const VecC& f,
                            const MatC& m) {
  const Eigen::VectorXd su = u.cwiseMax(0.0).cwiseSqrt();
  const MatC a = su.asDiagonal() * m;
  const VecC b = su.asDiagonal() * f;
  return a.completeOrthogonalDecomposition().solve(b);
}

struct Descent {
  VecC solution;
  double objective_value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Damped IRLS with a monotone line search: reweight by w·|r|^{α−2} (residual
/// clipped from below), then step toward the weighted least-squares solution
/// only as far as the objective decreases.
Descent irls_descent(const Eigen::VectorXd& w, const VecC& f, const MatC& m,
                     double alpha, VecC start, const ApproxOptions& opts) {
  Descent d;
  d.solution = std::move(start);
  d.objective_value = objective(w, f, m, d.solution, alpha);
  for (int it = 0; it < opts.max_iterations; ++it) {
    d.iterations = it + 1;
    const VecC r = f - m * d.solution;
    Eigen::VectorXd u(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      u(i) = w(i) * std::pow(std::max(std::abs(r(i)), opts.residual_floor),
                             alpha - 2.0);
    }
    const VecC target = weighted_least_squares(u, f, m);
    VecC accepted = d.solution;
    double accepted_value = d.objective_value;
    double step = 1.0;
    while (step > 1e-6) {
      const VecC candidate = d.solution + step * (target - d.solution);
      const double value = objective(w, f, m, candidate, alpha);
      if (value < accepted_value) {
        accepted = candidate;
        accepted_value = value;
        break;
      }
      step *= 0.5;
    }
    const double decrease = d.objective_value - accepted_value;
    d.solution = accepted;
    d.objective_value = accepted_value;
    if (decrease <= opts.objective_tol * std::max(1.0, d.objective_value)) {
      d.converged = true;
      break;
    }
  }
  return d;
}

}  // namespace

ApproxResult best_approximation_error(const DiscreteMeasure& m,
                                      const Subgroup& h,
                                      const std::vector<Cplx>& f, double alpha,
                                      const ApproxOptions& options) {
  require_same_parent(m.parent(), h.parent());
  require_density_operand(m);
  if (!(alpha > 0.0)) {
    throw error("bad_alpha", "alpha must be positive");
  }
  if (f.size() != m.size()) {
    throw error("dimension_mismatch",
                "f must be given on exactly the support of the measure");
  }

  const CharacterMatrix cm = character_matrix(m, h, options.max_enumeration);
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::VectorXd w(n);
  VecC fv(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    w(i) = m.atoms()[static_cast<std::size_t>(i)].weight.real();
    fv(i) = f[static_cast<std::size_t>(i)];
  }
  const MatC& mat = cm.values;

  ApproxResult result;
  const auto finish = [&](double obj, bool converged, int iterations) {
    result.error = std::pow(obj, std::min(1.0, 1.0 / alpha));
    result.converged = converged;
    result.iterations = iterations;
    return result;
  };

  const VecC ls = weighted_least_squares(w, fv, mat);
  if (alpha == 2.0) {
    return finish(objective(w, fv, mat, ls, 2.0), true, 1);
  }

  if (alpha >= 1.0) {
    Descent d = irls_descent(w, fv, mat, alpha, ls, options);
    return finish(d.objective_value, d.converged, d.iterations);
  }

  // alpha in (0,1): nonconvex; multistart local descent, upper bound only.
  result.heuristic = true;
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double scale = std::max(1.0, ls.norm());
  Descent best;
  bool have_best = false;
  int iterations = 0;
  bool all_converged = true;
  for (int s = 0; s < std::max(1, options.multistarts); ++s) {
    VecC start;
    if (s == 0) {
      start = ls;
    } else if (s == 1) {
      start = VecC::Zero(mat.cols());
    } else {
      start = ls;
      for (Eigen::Index i = 0; i < start.size(); ++i) {
        start(i) += 0.5 * scale * Cplx(gauss(rng), gauss(rng));
      }
    }
    Descent d = irls_descent(w, fv, mat, alpha, std::move(start), options);
    iterations += d.iterations;
    all_converged = all_converged && d.converged;
    if (!have_best || d.objective_value < best.objective_value) {
      best = std::move(d);
      have_best = true;
    }
  }
  return finish(best.objective_value, all_converged, iterations);
}

ExtractResult extract_concentration_set(const DiscreteMeasure& m,
                                        const QuotientMap& q) {
  require_same_parent(m.parent(), q.parent());
  if (m.kind() != WeightKind::nonnegative) {
    throw error("wrong_kind", "extraction takes a nonnegative measure");
  }
  const GroupSpec& spec = m.parent();

  // Against the canonical transversal T, the atom at γ lies in λ + T for
  // exactly λ = γ − rep(γ); its translated support point is rep(γ). T_λ is
  // the support of the translated restriction, and overlaps T_λκ collect the
  // representatives reached from two different shifts.
  std::map<GroupElement, std::vector<GroupElement>> shifts_by_rep;
  for (const Atom& a : m.atoms()) {
    const GroupElement rep = q.canonical_rep(a.point);
    shifts_by_rep[rep].push_back(spec.sub(a.point, rep));
  }

  std::map<std::pair<GroupElement, GroupElement>, std::vector<GroupElement>>
      overlap_points;
  for (const auto& [rep, shifts] : shifts_by_rep) {
    for (std::size_t i = 0; i < shifts.size(); ++i) {
      for (std::size_t j = i + 1; j < shifts.size(); ++j) {
        auto key = std::minmax(shifts[i], shifts[j]);
        overlap_points[{key.first, key.second}].push_back(rep);
      }
    }
  }

  ExtractResult out;
  if (!overlap_points.empty()) {
    out.success = false;
    for (auto& [pair, reps] : overlap_points) {
      out.overlaps.push_back(
          {pair.first, pair.second, PointSet::of(spec, std::move(reps))});
    }
    return out;
  }

  out.success = true;
  std::vector<GroupElement> d;
  d.reserve(m.size());
  for (const auto& [rep, shifts] : shifts_by_rep) {
    d.push_back(spec.add(shifts.front(), rep));  // λ + T_λ, overlap-free
  }
  out.concentration_set = PointSet::of(spec, std::move(d));
  return out;
}

NullSpaceResult annihilating_null_space(const PointSet& nu_support,
                                        const Subgroup& h,
                                        const QuotientMap& q, double rel_tol,
                                        Int max_enumeration) {
  require_same_parent(nu_support.parent(), h.parent());
  require_same_parent(nu_support.parent(), q.parent());
  if (nu_support.empty()) {
    throw error("empty_support", "null space of an empty support is undefined");
  }
  const CharacterMatrix cm =
      character_matrix(nu_support.points(), h, max_enumeration);
  const Int rank = numerical_rank(cm.values, rel_tol);
  NullSpaceResult r;
  r.dimension = static_cast<Int>(nu_support.size()) - rank;
  r.support_is_partial_transversal = is_partial_transversal(q, nu_support);
  return r;
}

}  // namespace th
