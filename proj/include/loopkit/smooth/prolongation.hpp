#pragma once

#include "loopkit/smooth/smooth_loop.hpp"

namespace loopkit::smooth {

/// A point of the tangent prolongation in the (base, fiber) chart; the fiber
/// is a vector of the tangent space at e.
struct ProlongedElement {
  Vec base;
  Vec fiber;
};

inline constexpr double kDefaultConditionLimit = 1e12;

/// Solves J·v = rhs, refusing (NumericError) when cond₂(J) exceeds `limit`.
Vec conditioned_solve(const Mat &J, const Vec &rhs, double limit = kDefaultConditionLimit);

/// (ξη, P(ξ,η)x + Q(ξ,η)y)
ProlongedElement prolong_mul(const SmoothLoop &loop, const ProlongedElement &a,
                             const ProlongedElement &b);
/// a\b: (ξ\η, Q(ξ,ξ\η)⁻¹(y − P(ξ,ξ\η)x))
ProlongedElement prolong_ldiv(const SmoothLoop &loop, const ProlongedElement &a,
                              const ProlongedElement &b,
                              double cond_limit = kDefaultConditionLimit);
/// b/a: (η/ξ, P(η/ξ,ξ)⁻¹(y − Q(η/ξ,ξ)x))
ProlongedElement prolong_rdiv(const SmoothLoop &loop, const ProlongedElement &b,
                              const ProlongedElement &a,
                              double cond_limit = kDefaultConditionLimit);

ProlongedElement prolong_identity(const SmoothLoop &loop);

/// Euclidean distance over base and fiber together.
double distance(const ProlongedElement &a, const ProlongedElement &b);

} // namespace loopkit::smooth
