#include "loopkit/enumerate.hpp"

#include <functional>
#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit {

bool LoopTrait::holds(const FiniteLoop &loop) const {
  switch (kind) {
  case Kind::Associative: return is_associative(loop).holds;
  case Kind::Commutative: return is_commutative(loop).holds;
  case Kind::Property: return has_property(loop, property).holds;
  }
  return false;
}

std::string LoopTrait::name() const {
  switch (kind) {
  case Kind::Associative: return "associative";
  case Kind::Commutative: return "commutative";
  case Kind::Property: return std::string(property_name(property));
  }
  return "?";
}

PropertyFilter PropertyFilter::parse(std::string_view text) {
  std::vector<TraitLiteral> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string_view term = text.substr(pos, comma - pos);
    pos = comma + 1;
    while (!term.empty() && term.front() == ' ')
      term.remove_prefix(1);
    while (!term.empty() && term.back() == ' ')
      term.remove_suffix(1);
    if (term.empty() || term == "any")
      continue;

    TraitLiteral lit;
    if (term.starts_with("non-")) {
      lit.negated = true;
      term.remove_prefix(4);
    } else if (term.starts_with("non")) {
      lit.negated = true;
      term.remove_prefix(3);
    }
    if (term == "associative") {
      lit.trait.kind = LoopTrait::Kind::Associative;
    } else if (term == "commutative") {
      lit.trait.kind = LoopTrait::Kind::Commutative;
    } else if (auto p = term.size() > 1 ? parse_property(term) : std::nullopt) {
      lit.trait.property = *p;
    } else {
      throw StructuralError("unknown loop property '" + std::string(term) + "'");
    }
    out.push_back(lit);
  }
  return PropertyFilter(std::move(out));
}

bool PropertyFilter::matches(const FiniteLoop &loop) const {
  for (const auto &lit : literals_)
    if (lit.trait.holds(loop) == lit.negated)
      return false;
  return true;
}

std::string PropertyFilter::to_string() const {
  if (literals_.empty())
    return "any";
  std::string s;
  for (std::size_t i = 0; i < literals_.size(); ++i)
    s += (i ? "," : "") + std::string(literals_[i].negated ? "non" : "") + literals_[i].trait.name();
  return s;
}

namespace {

constexpr int kUnset = -1;

/// Row-major backtracking over the non-identity cells of a Latin square.
class Search {
public:
  Search(std::size_t n, const PropertyFilter &filter, std::size_t limit)
      : n_(int(n)), filter_(filter), limit_(limit), table_(n * n, kUnset), row_used_(n, 0),
        col_used_(n, 0) {
    for (int i = 0; i < n_; ++i) {
      set(0, i, i);
      set(i, 0, i);
    }
    for (const auto &lit : filter.literals())
      if (!lit.negated)
        add_pruner(lit.trait);
  }

  std::vector<FiniteLoop> run() {
    if (n_ == 1) {
      leaf();
      return std::move(found_);
    }
    descend(0);
    return std::move(found_);
  }

private:
  using Pruner = std::function<bool(int, int, int)>;

  int at(int a, int b) const { return (a < 0 || b < 0) ? kUnset : table_[a * n_ + b]; }

  void set(int r, int c, int v) {
    table_[r * n_ + c] = v;
    row_used_[r] |= 1u << v;
    col_used_[c] |= 1u << v;
  }

  void unset(int r, int c) {
    const int v = table_[r * n_ + c];
    table_[r * n_ + c] = kUnset;
    row_used_[r] &= ~(1u << v);
    col_used_[c] &= ~(1u << v);
  }

  static bool differ(int a, int b) { return a >= 0 && b >= 0 && a != b; }

  // Each pruner reports a definite violation of the identity at one tuple
  // of the partial table; undefined products never count as violations.
  void add_pruner(const LoopTrait &t) {
    auto m = [this](int a, int b) { return at(a, b); };
    if (t.kind == LoopTrait::Kind::Associative) {
      pruners_.push_back({3, [=](int x, int y, int z) {
                            return differ(m(m(x, y), z), m(x, m(y, z)));
                          }});
      return;
    }
    if (t.kind == LoopTrait::Kind::Commutative) {
      pruners_.push_back({2, [=](int x, int y, int) { return differ(m(x, y), m(y, x)); }});
      return;
    }
    switch (t.property) {
    case PropertyKind::Monoassociative:
      pruners_.push_back({1, [=](int x, int, int) {
                            const int s = m(x, x);
                            return differ(m(x, s), m(s, x));
                          }});
      break;
    case PropertyKind::LeftAlternative:
      pruners_.push_back(
          {2, [=](int x, int y, int) { return differ(m(x, m(x, y)), m(m(x, x), y)); }});
      break;
    case PropertyKind::RightAlternative:
      pruners_.push_back(
          {2, [=](int x, int y, int) { return differ(m(m(y, x), x), m(y, m(x, x))); }});
      break;
    case PropertyKind::Flexible:
      pruners_.push_back(
          {2, [=](int x, int y, int) { return differ(m(x, m(y, x)), m(m(x, y), x)); }});
      break;
    case PropertyKind::LeftBol:
      pruners_.push_back({3, [=](int x, int y, int z) {
                            return differ(m(m(x, m(y, x)), z), m(x, m(y, m(x, z))));
                          }});
      break;
    case PropertyKind::RightBol:
      pruners_.push_back({3, [=](int x, int y, int z) {
                            return differ(m(z, m(m(x, y), x)), m(m(m(z, x), y), x));
                          }});
      break;
    default:
      // Inverse properties are decided on complete tables only.
      break;
    }
  }

  bool violates() const {
    for (const auto &[arity, bad] : pruners_) {
      const int ny = arity >= 2 ? n_ : 1, nz = arity >= 3 ? n_ : 1;
      for (int x = 1; x < n_; ++x)
        for (int y = 0; y < ny; ++y)
          for (int z = 0; z < nz; ++z)
            if (bad(x, y, z))
              return true;
    }
    return false;
  }

  void leaf() {
    std::vector<Element> entries(table_.begin(), table_.end());
    FiniteLoop loop{CayleyTable(std::size_t(n_), std::move(entries))};
    if (filter_.matches(loop))
      found_.push_back(std::move(loop));
  }

  void descend(int cell) {
    const int inner = n_ - 1;
    if (cell == inner * inner) {
      leaf();
      return;
    }
    const int r = 1 + cell / inner, c = 1 + cell % inner;
    const unsigned used = row_used_[r] | col_used_[c];
    for (int v = 0; v < n_ && found_.size() < limit_; ++v) {
      if (used & (1u << v))
        continue;
      set(r, c, v);
      if (!violates())
        descend(cell + 1);
      unset(r, c);
    }
  }

  int n_;
  const PropertyFilter &filter_;
  std::size_t limit_;
  std::vector<int> table_;
  std::vector<unsigned> row_used_, col_used_;
  std::vector<std::pair<int, Pruner>> pruners_;
  std::vector<FiniteLoop> found_;
};

} // namespace

std::vector<FiniteLoop> enumerate_loops(std::size_t order, const PropertyFilter &filter,
                                        std::size_t limit) {
  if (order == 0 || order > kMaxEnumerationOrder)
    throw StructuralError("enumeration order must be in [1, " +
                          std::to_string(kMaxEnumerationOrder) + "], got " +
                          std::to_string(order));
  if (limit == 0)
    return {};
  return Search(order, filter, limit).run();
}

} // namespace loopkit
