#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "loopkit/smooth/smooth_loop.hpp"

namespace loopkit::smooth {

// Catalog of built-in smooth loops:
//
//   additive     (ℝ², +)
//   affine       {(a,b) : a > 0}, (a₁,b₁)(a₂,b₂) = (a₁a₂, a₁b₂ + b₁), e = (1,0)
//   parabolic    ℝ², x·y = (x₁+y₁, x₂+y₂+x₁y₁²)
//   commutative  ℝ², x·y = (x₁+y₁, x₂+y₂+x₁²y₁²)
//   spd-bol      2×2 symmetric positive definite (a,b,c), x∘y = x^½ y x^½

std::vector<std::string> builtin_names();

/// Throws StructuralError for an unknown name.
std::unique_ptr<SmoothLoop> builtin_loop(std::string_view name);

/// The additive group ℝⁿ of any dimension.
std::unique_ptr<SmoothLoop> additive_loop(std::size_t dim);

} // namespace loopkit::smooth
