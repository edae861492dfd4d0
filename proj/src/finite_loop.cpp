#include "loopkit/finite_loop.hpp"

#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit {

CayleyTable::CayleyTable(const std::vector<std::vector<Element>> &rows)
    : order_(rows.size()) {
  if (order_ == 0)
    throw StructuralError("Cayley table must have at least one row");
  entries_.reserve(order_ * order_);
  for (std::size_t r = 0; r < order_; ++r) {
    if (rows[r].size() != order_) {
      std::ostringstream msg;
      msg << "row " << r << " has " << rows[r].size() << " entries, expected " << order_;
      throw StructuralError(msg.str());
    }
    entries_.insert(entries_.end(), rows[r].begin(), rows[r].end());
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= order_) {
      std::ostringstream msg;
      msg << "entry (" << i / order_ << "," << i % order_ << ") = " << entries_[i]
          << " is out of range for order " << order_;
      throw StructuralError(msg.str());
    }
  }
}

CayleyTable::CayleyTable(std::size_t order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ == 0 || entries_.size() != order_ * order_)
    throw StructuralError("Cayley table entry count does not match order");
  for (Element v : entries_)
    if (v >= order_)
      throw StructuralError("Cayley table entry out of range");
}

CayleyTable CayleyTable::transposed() const {
  std::vector<Element> t(entries_.size());
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y)
      t[y * order_ + x] = entries_[x * order_ + y];
  return CayleyTable(order_, std::move(t));
}

ValidationReport validate_quasigroup(const CayleyTable &table) {
  ValidationReport report;
  const std::size_t n = table.order();
  std::vector<char> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      auto v = table.at(Element(x), Element(y));
      if (seen[v]) {
        report.bad_rows.push_back(x);
        report.fail("row " + std::to_string(x) + " repeats " + std::to_string(v));
        break;
      }
      seen[v] = 1;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      auto v = table.at(Element(x), Element(y));
      if (seen[v]) {
        report.bad_columns.push_back(y);
        report.fail("column " + std::to_string(y) + " repeats " + std::to_string(v));
        break;
      }
      seen[v] = 1;
    }
  }
  return report;
}

ValidationReport validate_loop(const CayleyTable &table) {
  ValidationReport report = validate_quasigroup(table);
  const std::size_t n = table.order();
  for (std::size_t y = 0; y < n; ++y) {
    if (table.at(0, Element(y)) != y) {
      report.fail("row 0 is not the identity row (0*" + std::to_string(y) + " != " +
                  std::to_string(y) + ")");
      break;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (table.at(Element(x), 0) != x) {
      report.fail("column 0 is not the identity column (" + std::to_string(x) + "*0 != " +
                  std::to_string(x) + ")");
      break;
    }
  }
  return report;
}

std::optional<Element> find_identity(const CayleyTable &table) {
  const std::size_t n = table.order();
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element y = 0; y < n && ok; ++y)
      ok = table.at(e, y) == y && table.at(y, e) == y;
    if (ok)
      return e;
  }
  return std::nullopt;
}

FiniteLoop::FiniteLoop(CayleyTable table) : table_(std::move(table)) {
  auto report = validate_loop(table_);
  if (!report.valid) {
    std::string msg = "not a loop with identity 0:";
    for (const auto &p : report.problems)
      msg += " " + p + ";";
    throw StructuralError(msg);
  }
  const std::size_t n = order();
  ldiv_.resize(n * n);
  rdiv_.resize(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element z = 0; z < n; ++z) {
      Element y = table_.at(x, z);
      ldiv_[x * n + y] = z; // x·z = y  =>  x\y = z
      rdiv_[y * n + z] = x; // x·z = y  =>  y/z = x
    }
}

Element FiniteLoop::check(Element x) const {
  if (x >= order())
    throw StructuralError("element " + std::to_string(x) + " out of range for order " +
                          std::to_string(order()));
  return x;
}

Perm FiniteLoop::left_translation(Element x) const {
  check(x);
  std::vector<Element> img(order());
  for (Element y = 0; y < order(); ++y)
    img[y] = table_.at(x, y);
  return Perm(std::move(img));
}

Perm FiniteLoop::right_translation(Element x) const {
  check(x);
  std::vector<Element> img(order());
  for (Element y = 0; y < order(); ++y)
    img[y] = table_.at(y, x);
  return Perm(std::move(img));
}

FiniteLoop FiniteLoop::opposite() const { return FiniteLoop(table_.transposed()); }

} // namespace loopkit
