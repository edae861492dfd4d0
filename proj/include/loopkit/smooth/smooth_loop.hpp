#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "loopkit/smooth/dual.hpp"

namespace loopkit::smooth {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using DualPoint = std::vector<Dual>;

/// A differentiable loop on an open subset of ℝⁿ with closed-form
/// operations. Each operation is available over doubles and over dual
/// numbers; the two must agree on values.
class SmoothLoop {
public:
  virtual ~SmoothLoop() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dim() const = 0;
  virtual Vec identity() const = 0;

  virtual Vec mul(const Vec &x, const Vec &y) const = 0;
  virtual Vec ldiv(const Vec &x, const Vec &y) const = 0; // x\y
  virtual Vec rdiv(const Vec &y, const Vec &x) const = 0; // y/x

  virtual DualPoint mul(const DualPoint &x, const DualPoint &y) const = 0;
  virtual DualPoint ldiv(const DualPoint &x, const DualPoint &y) const = 0;
  virtual DualPoint rdiv(const DualPoint &y, const DualPoint &x) const = 0;

  /// Membership in the open domain.
  virtual bool in_domain(const Vec &x) const = 0;
  /// A point drawn uniformly from the sampling box inside the domain.
  virtual Vec sample(std::mt19937_64 &rng) const = 0;
};

/// Smooth self-map of ℝⁿ evaluable over dual numbers.
using DualMap = std::function<DualPoint(const DualPoint &)>;

DualPoint to_dual(const Vec &x);
Vec values(const DualPoint &x);
Vec derivatives(const DualPoint &x);

// Translations and their inverses as dual maps; the parameter is fixed.
DualMap left_map(const SmoothLoop &loop, const Vec &a);      // p ↦ a·p
DualMap right_map(const SmoothLoop &loop, const Vec &a);     // p ↦ p·a
DualMap left_inv_map(const SmoothLoop &loop, const Vec &a);  // p ↦ a\p
DualMap right_inv_map(const SmoothLoop &loop, const Vec &a); // p ↦ p/a

/// Composition; the last map acts first.
DualMap chain(std::vector<DualMap> maps);

/// Jacobian of f at p; column j comes from a δ-perturbation of coordinate j.
/// Throws NumericError on a non-finite entry.
Mat jacobian_at(const DualMap &f, const Vec &p);

/// Central finite differences with step h; used as a cross-check.
Mat finite_difference_jacobian(const DualMap &f, const Vec &p, double h = 1e-4);

/// Requires x in the domain; throws DomainError otherwise.
void require_domain(const SmoothLoop &loop, const Vec &x, const char *what);

/// Jacobian at e of λ_{ξη}⁻¹ ρ_η λ_ξ.
Mat cocycle_P(const SmoothLoop &loop, const Vec &xi, const Vec &eta);
/// Jacobian at e of λ_{ξη}⁻¹ λ_ξ λ_η.
Mat cocycle_Q(const SmoothLoop &loop, const Vec &xi, const Vec &eta);

/// Operator 2-norm.
double operator_norm(const Mat &m);

} // namespace loopkit::smooth
