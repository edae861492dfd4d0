#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "loopkit/conditions.hpp"
#include "loopkit/smooth/prolongation.hpp"
#include "loopkit/smooth/smooth_loop.hpp"

namespace loopkit::smooth {

struct NumericOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  double cond_limit = kDefaultConditionLimit;
  /// Redraws allowed per sample when a point leaves the domain.
  std::size_t retry_cap = 64;
};

/// The random stream of one sample, a function of (seed, index) only.
std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index);

/// Three domain points drawn from the sampling box of the loop.
std::vector<Vec> sample_tuple(const SmoothLoop &loop, std::mt19937_64 &rng, std::size_t retry_cap);

struct NumericReport {
  PropertyKind property = PropertyKind::TwoSidedInverse;
  Verdict verdict = Verdict::Holds;
  double max_residual = 0.0;
  std::size_t samples = 0;
  /// Sample index and points where the largest residual occurred.
  std::size_t witness_index = 0;
  std::vector<Vec> witness;
  std::string detail;

  bool holds() const noexcept { return verdict == Verdict::Holds; }
};

/// Both sides of the Jacobian condition for p at one tuple, as matrices.
/// Throws DomainError when the loop has no two-sided inverse where needed.
std::pair<Mat, Mat> condition_ii_sides(const SmoothLoop &loop, PropertyKind p,
                                       const std::vector<Vec> &tuple, double inverse_tol);

/// Largest operator-norm residual of the condition over sampled tuples.
/// NotApplicable when an inverse-flavored condition meets a point whose left
/// and right inverses differ by more than tol.
NumericReport check_condition_ii(const SmoothLoop &loop, PropertyKind p,
                                 const NumericOptions &opts);

/// Residual of the property's defining identity on the loop at one tuple.
double property_residual(const SmoothLoop &loop, PropertyKind p, const std::vector<Vec> &tuple);

/// Same on the tangent prolongation.
double prolonged_property_residual(const SmoothLoop &loop, PropertyKind p,
                                   const std::vector<ProlongedElement> &tuple,
                                   double cond_limit = kDefaultConditionLimit);

struct SuiteRow {
  PropertyKind property = PropertyKind::TwoSidedInverse;
  double res_loop = 0.0;
  double res_tangent = 0.0;
  NumericReport condition;
  bool holds_loop = true;
  bool holds_tangent = true;
  /// holds_tangent == holds_loop, and the condition holds whenever the
  /// property holds on the loop.
  bool consistent = true;
  std::size_t witness_loop = 0;
  std::size_t witness_tangent = 0;
};

/// A derivative formula for inverses checked along straight-line curves.
struct FormulaCheck {
  std::string name;
  bool applicable = true;
  double max_residual = 0.0;
  std::size_t witness_index = 0;
  bool holds(double tol) const { return !applicable || max_residual <= tol; }
};

struct SuiteReport {
  std::string loop;
  NumericOptions options;
  std::vector<SuiteRow> rows;
  std::vector<FormulaCheck> formulas;

  bool consistent() const;
};

/// Dual-number derivative of t ↦ e/ξ(t) against −d_ξ(ρ_ξ⁻¹ λ_{ξ⁻¹})ξ̇.
FormulaCheck check_inverse_derivative(const SmoothLoop &loop, const NumericOptions &opts);
/// Dual-number derivative of t ↦ ξ(t)\e against −d_ξ(λ_ξ⁻¹ ρ_{ξ⁻¹})ξ̇.
FormulaCheck check_right_inverse_derivative(const SmoothLoop &loop, const NumericOptions &opts);

SuiteReport theorem1_suite(const SmoothLoop &loop, const NumericOptions &opts);

/// Aligned table, or one "key=value" line per property when porcelain.
std::string format_suite(const SuiteReport &report, bool porcelain);

} // namespace loopkit::smooth
