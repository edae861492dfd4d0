#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "loopkit/conditions.hpp"
#include "loopkit/finite_loop.hpp"

namespace loopkit {

/// Anything a search can filter on: the nine weak properties plus
/// associativity and commutativity.
struct LoopTrait {
  enum class Kind { Property, Associative, Commutative };
  Kind kind = Kind::Property;
  PropertyKind property = PropertyKind::TwoSidedInverse;

  bool holds(const FiniteLoop &loop) const;
  std::string name() const;
  friend bool operator==(const LoopTrait &, const LoopTrait &) = default;
};

struct TraitLiteral {
  LoopTrait trait;
  bool negated = false;
  friend bool operator==(const TraitLiteral &, const TraitLiteral &) = default;
};

/// Conjunction of literals. Parsed from a comma list such as
/// "left-bol,nonassociative"; a "non" prefix negates a term.
class PropertyFilter {
public:
  PropertyFilter() = default;
  explicit PropertyFilter(std::vector<TraitLiteral> literals) : literals_(std::move(literals)) {}

  /// Throws StructuralError on an unknown term.
  static PropertyFilter parse(std::string_view text);

  const std::vector<TraitLiteral> &literals() const noexcept { return literals_; }
  bool matches(const FiniteLoop &loop) const;
  std::string to_string() const;

private:
  std::vector<TraitLiteral> literals_;
};

inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// Loops of the given order with identity 0 that satisfy the filter, in
/// lexicographic order of their row-major tables, at most `limit` of them.
/// Throws StructuralError for order 0 or order above kMaxEnumerationOrder.
std::vector<FiniteLoop> enumerate_loops(std::size_t order, const PropertyFilter &filter,
                                        std::size_t limit);

} // namespace loopkit
