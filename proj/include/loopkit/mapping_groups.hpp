#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "loopkit/finite_loop.hpp"
#include "loopkit/perm.hpp"

namespace loopkit {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// A finite permutation group held as its full element list.
///
/// Elements are kept sorted (lexicographic on image arrays), so two groups
/// with the same elements compare and print identically regardless of how
/// they were generated.
class PermGroup {
public:
  struct Generator {
    Perm perm;
    std::string label;
  };

  PermGroup(std::size_t degree, std::vector<Perm> sorted_elements, std::vector<Generator> gens);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Perm> &elements() const noexcept { return elements_; }
  const std::vector<Generator> &generators() const noexcept { return generators_; }

  bool contains(const Perm &p) const { return index_of(p).has_value(); }
  /// Position of p in elements(), if present.
  std::optional<std::size_t> index_of(const Perm &p) const;

private:
  std::size_t degree_;
  std::vector<Perm> elements_;
  std::vector<Generator> generators_;
};

/// Closure of the generators under composition (breadth-first, deduplicated).
/// Throws ResourceError once more than `cap` elements are found.
PermGroup generate_group(std::size_t degree, std::vector<PermGroup::Generator> generators,
                         std::size_t cap = kDefaultGroupCap);

/// Mlt(L) = <λ_x, ρ_x : x ∈ L>. Generators are labelled "L<x>" and "R<x>".
PermGroup multiplication_group(const FiniteLoop &loop, std::size_t cap = kDefaultGroupCap);

/// Inn(L), the stabilizer of 0 in Mlt(L). The generator list is a greedy
/// generating set picked from the elements in sorted order.
PermGroup inner_mapping_group(const FiniteLoop &loop, std::size_t cap = kDefaultGroupCap);

/// Stabilizer of `point` inside `group`, with greedy generators.
PermGroup stabilizer(const PermGroup &group, Element point);

/// λ_{ξη}⁻¹ ρ_η λ_ξ. Fixes 0.
Perm inner_map_P(const FiniteLoop &loop, Element xi, Element eta);

/// λ_{ξη}⁻¹ λ_ξ λ_η. Fixes 0.
Perm inner_map_Q(const FiniteLoop &loop, Element xi, Element eta);

} // namespace loopkit
