#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "loopkit/perm.hpp"

namespace loopkit {

/// A square array of element indices. Holds no algebraic invariant beyond
/// its shape and entry range; validate_quasigroup / validate_loop decide
/// whether it is a Latin square with identity 0.
class CayleyTable {
public:
  CayleyTable() = default;

  /// Throws StructuralError if `rows` is not n×n or an entry is outside [0,n).
  explicit CayleyTable(const std::vector<std::vector<Element>> &rows);

  /// Row-major entries, length order*order.
  CayleyTable(std::size_t order, std::vector<Element> entries);

  std::size_t order() const noexcept { return order_; }
  Element at(Element x, Element y) const { return entries_[x * order_ + y]; }
  const std::vector<Element> &entries() const noexcept { return entries_; }

  CayleyTable transposed() const;

  friend bool operator==(const CayleyTable &, const CayleyTable &) = default;
  friend auto operator<=>(const CayleyTable &, const CayleyTable &) = default;

private:
  std::size_t order_ = 0;
  std::vector<Element> entries_;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::size_t> bad_rows;
  std::vector<std::size_t> bad_columns;
  std::vector<std::string> problems;

  void fail(std::string problem) {
    valid = false;
    problems.push_back(std::move(problem));
  }
};

/// Every row and every column must be a permutation of {0..n-1}.
ValidationReport validate_quasigroup(const CayleyTable &table);

/// Latin square with element 0 as two-sided identity.
ValidationReport validate_loop(const CayleyTable &table);

/// Any two-sided identity of a quasigroup table, not necessarily 0.
std::optional<Element> find_identity(const CayleyTable &table);

/// An exact finite loop with identity 0. Divisions are tabulated at
/// construction, so every operation is a lookup.
class FiniteLoop {
public:
  /// Throws StructuralError carrying the validation problems if `table`
  /// is not a loop with identity 0. Tables are rejected, never renormalized.
  explicit FiniteLoop(CayleyTable table);

  std::size_t order() const noexcept { return table_.order(); }
  const CayleyTable &table() const noexcept { return table_; }

  Element mul(Element x, Element y) const { return table_.at(check(x), check(y)); }
  /// x\y, the unique z with x·z = y.
  Element ldiv(Element x, Element y) const { return ldiv_[check(x) * order() + check(y)]; }
  /// y/x, the unique z with z·x = y.
  Element rdiv(Element y, Element x) const { return rdiv_[check(y) * order() + check(x)]; }

  Perm left_translation(Element x) const;
  Perm right_translation(Element x) const;

  /// e/x
  Element left_inverse(Element x) const { return rdiv(0, x); }
  /// x\e
  Element right_inverse(Element x) const { return ldiv(x, 0); }

  /// x⋆y = y·x on the same set.
  FiniteLoop opposite() const;

  friend bool operator==(const FiniteLoop &a, const FiniteLoop &b) { return a.table_ == b.table_; }

private:
  Element check(Element x) const;

  CayleyTable table_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
};

} // namespace loopkit
