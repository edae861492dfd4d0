#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "loopkit/abelian.hpp"
#include "loopkit/conditions.hpp"
#include "loopkit/extension_io.hpp"
#include "loopkit/extensions.hpp"
#include "loopkit/finite_loop.hpp"
#include "loopkit/mapping_groups.hpp"
#include "loopkit/table_io.hpp"

namespace testing {

using namespace loopkit;

inline std::string fixture_path(const std::string &name) {
  return std::string(LOOPKIT_FIXTURE_DIR) + "/" + name;
}

inline FiniteLoop fixture(const std::string &name) {
  return FiniteLoop(read_table_file(fixture_path(name)));
}

inline CayleyTable cyclic_table(std::size_t n) {
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      rows[x][y] = Element((x + y) % n);
  return CayleyTable(rows);
}

/// S₃ built from its permutations (lexicographic order, identity first),
/// independent of the fixture file.
inline CayleyTable symmetric3_table() {
  std::vector<std::vector<Element>> perms;
  std::vector<Element> p{0, 1, 2};
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<Element> &q) {
    return Element(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<Element>> rows(6, std::vector<Element>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<Element> c(3);
      for (std::size_t i = 0; i < 3; ++i)
        c[i] = perms[a][perms[b][i]];
      rows[a][b] = index(c);
    }
  return CayleyTable(rows);
}

struct NamedLoop {
  std::string name;
  FiniteLoop loop;
};

/// The audit corpus: ℤ₄, S₃, the first nonassociative loops of orders 5 and 6.
inline std::vector<NamedLoop> corpus() {
  return {{"z4", fixture("z4.tbl")},
          {"s3", fixture("s3.tbl")},
          {"n5", fixture("n5.tbl")},
          {"n6", fixture("n6.tbl")}};
}

inline std::vector<AbGroup> corpus_kernels() {
  return {AbGroup(2, 1), AbGroup(3, 1), AbGroup(2, 2)};
}

// --- naive property oracle ------------------------------------------------
//
// Straight transcriptions of the defining identities on raw table entries,
// sharing no code with the library checkers.

inline bool naive_has(const CayleyTable &t, PropertyKind p) {
  const auto n = Element(t.order());
  auto m = [&](Element a, Element b) { return t.at(a, b); };
  auto solve_left = [&](Element x) { // e/x: z with z·x = 0
    for (Element z = 0; z < n; ++z)
      if (m(z, x) == 0)
        return z;
    return n;
  };
  auto solve_right = [&](Element x) { // x\e: z with x·z = 0
    for (Element z = 0; z < n; ++z)
      if (m(x, z) == 0)
        return z;
    return n;
  };
  bool two_sided = true;
  for (Element x = 0; x < n; ++x)
    two_sided = two_sided && solve_left(x) == solve_right(x);
  bool ok = true;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        switch (p) {
        case PropertyKind::TwoSidedInverse: ok = ok && two_sided; break;
        case PropertyKind::LeftInverse:
          ok = ok && two_sided && m(solve_left(x), m(x, y)) == y;
          break;
        case PropertyKind::RightInverse:
          ok = ok && two_sided && m(m(y, x), solve_left(x)) == y;
          break;
        case PropertyKind::Monoassociative: ok = ok && m(x, m(x, x)) == m(m(x, x), x); break;
        case PropertyKind::LeftAlternative: ok = ok && m(x, m(x, y)) == m(m(x, x), y); break;
        case PropertyKind::RightAlternative: ok = ok && m(m(y, x), x) == m(y, m(x, x)); break;
        case PropertyKind::Flexible: ok = ok && m(x, m(y, x)) == m(m(x, y), x); break;
        case PropertyKind::LeftBol: ok = ok && m(m(x, m(y, x)), z) == m(x, m(y, m(x, z))); break;
        case PropertyKind::RightBol: ok = ok && m(z, m(m(x, y), x)) == m(m(m(z, x), y), x); break;
        }
      }
  return ok;
}

inline bool naive_associative(const CayleyTable &t) {
  const auto n = Element(t.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z)))
          return false;
  return true;
}

// --- homomorphism families Inn(L) → Aut(A) ---------------------------------

struct NamedPhi {
  std::string name;
  PhiAssignments assignments;
};

/// Orbits of the group on {1..n-1}, in order of their least point.
inline std::vector<std::vector<Element>> orbits(const PermGroup &g) {
  std::vector<int> seen(g.degree(), 0);
  std::vector<std::vector<Element>> out;
  for (Element s = 1; s < g.degree(); ++s) {
    if (seen[s])
      continue;
    std::vector<Element> orbit;
    for (const auto &p : g.elements())
      if (!seen[p(s)]) {
        seen[p(s)] = 1;
        orbit.push_back(p(s));
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

/// Parity of p restricted to an invariant set.
inline int restricted_parity(const Perm &p, const std::vector<Element> &set) {
  std::vector<Element> local(set.size());
  for (std::size_t i = 0; i < set.size(); ++i)
    local[i] = Element(std::find(set.begin(), set.end(), p(set[i])) - set.begin());
  return parity(Perm(local));
}

/// An involution of A (if A has one besides I), conjugated by a random
/// automorphism.
inline std::optional<ModMatrix> involution(const AbGroup &a, std::uint64_t seed) {
  std::optional<ModMatrix> d;
  if (a.rank() == 1 && a.modulus() > 2)
    d = ModMatrix(a, {a.modulus() - 1});
  else if (a.rank() == 2)
    d = ModMatrix(a, {0, 1, 1, 0});
  if (!d)
    return std::nullopt;
  const auto c = random_automorphism(a, seed);
  return compose(compose(c, *d), invert(c));
}

/// Image in GL(2,2) of a permutation of a 3-element orbit, via the action of
/// GL(2,2) on the three nonzero vectors (1,0), (0,1), (1,1).
inline ModMatrix gl22_of(const Perm &p, const std::vector<Element> &orbit, const AbGroup &a) {
  static const std::int64_t vecs[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  auto pos = [&](Element x) { return std::size_t(std::find(orbit.begin(), orbit.end(), x) - orbit.begin()); };
  const auto i0 = pos(p(orbit[0])), i1 = pos(p(orbit[1]));
  return ModMatrix(a, {vecs[i0][0], vecs[i1][0], vecs[i0][1], vecs[i1][1]});
}

/// For a group table: Inn generator ↦ [−1] or [1] by the sign of an element
/// whose conjugation it is (sign = parity of the left regular action).
inline std::optional<PhiAssignments> sign_assignments(const FiniteLoop &g, const PermGroup &inn,
                                                      const AbGroup &a) {
  if (a.rank() != 1 || a.modulus() <= 2)
    return std::nullopt;
  PhiAssignments out;
  for (const auto &gen : inn.generators()) {
    std::optional<int> sign;
    for (Element x = 0; x < g.order() && !sign; ++x) {
      bool same = true;
      for (Element y = 0; y < g.order() && same; ++y)
        same = g.rdiv(g.mul(x, y), x) == gen.perm(y);
      if (same)
        sign = parity(g.left_translation(x));
    }
    if (!sign)
      return std::nullopt;
    out.emplace_back(gen.perm, ModMatrix(a, {*sign ? a.modulus() - 1 : 1}));
  }
  return out;
}

/// A spread of homomorphisms: trivial, orbit parities into an involution,
/// the action on a 3-point orbit into GL(2,2), and for groups the sign map.
inline std::vector<NamedPhi> phi_family(const FiniteLoop &loop, const PermGroup &inn,
                                        const AbGroup &a, std::uint64_t seed) {
  std::vector<NamedPhi> out;
  PhiAssignments trivial;
  for (const auto &g : inn.generators())
    trivial.emplace_back(g.perm, ModMatrix::identity(a));
  out.push_back({"trivial", trivial});

  const auto orbs = orbits(inn);
  for (std::size_t k = 0; k < orbs.size(); ++k) {
    auto m = involution(a, seed + k);
    if (!m)
      break;
    PhiAssignments as;
    bool nontrivial = false;
    for (const auto &g : inn.generators()) {
      const bool odd = restricted_parity(g.perm, orbs[k]) != 0;
      nontrivial = nontrivial || odd;
      as.emplace_back(g.perm, odd ? *m : ModMatrix::identity(a));
    }
    if (nontrivial)
      out.push_back({"orbit-parity#" + std::to_string(k), as});
  }

  if (a.rank() == 2 && a.modulus() == 2) {
    for (std::size_t k = 0; k < orbs.size(); ++k) {
      if (orbs[k].size() != 3)
        continue;
      PhiAssignments as;
      bool nontrivial = false;
      for (const auto &g : inn.generators()) {
        auto m = gl22_of(g.perm, orbs[k], a);
        nontrivial = nontrivial || !m.is_identity();
        as.emplace_back(g.perm, m);
      }
      if (nontrivial)
        out.push_back({"orbit-gl22#" + std::to_string(k), as});
    }
  }

  if (naive_associative(loop.table()))
    if (auto s = sign_assignments(loop, inn, a))
      out.push_back({"sign", *s});
  return out;
}

} // namespace testing
