#include "loopkit/abelian.hpp"

#include <charconv>
#include <tuple>
#include <numeric>
#include <random>
#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit {

AbGroup::AbGroup(std::int64_t modulus, std::size_t rank) : modulus_(modulus), rank_(rank) {
  if (modulus < 0 || modulus == 1)
    throw StructuralError("abelian group modulus must be 0 or at least 2, got " +
                          std::to_string(modulus));
  if (rank == 0)
    throw StructuralError("abelian group rank must be at least 1");
}

AbGroup AbGroup::parse(std::string_view spec) {
  auto bad = [&] { return StructuralError("bad abelian group spec '" + std::string(spec) +
                                          "', expected z<m>^<k>"); };
  if (spec.size() < 4 || (spec[0] != 'z' && spec[0] != 'Z'))
    throw bad();
  auto caret = spec.find('^');
  if (caret == std::string_view::npos)
    throw bad();
  std::int64_t m = 0;
  std::size_t k = 0;
  auto ms = spec.substr(1, caret - 1);
  auto ks = spec.substr(caret + 1);
  auto r1 = std::from_chars(ms.data(), ms.data() + ms.size(), m);
  auto r2 = std::from_chars(ks.data(), ks.data() + ks.size(), k);
  if (ms.empty() || ks.empty() || r1.ec != std::errc() || r1.ptr != ms.data() + ms.size() ||
      r2.ec != std::errc() || r2.ptr != ks.data() + ks.size())
    throw bad();
  return AbGroup(m, k);
}

std::size_t AbGroup::order() const {
  if (!is_finite())
    throw DomainError("Z^k is infinite");
  std::size_t n = 1;
  for (std::size_t i = 0; i < rank_; ++i)
    n *= std::size_t(modulus_);
  return n;
}

std::int64_t AbGroup::reduce(std::int64_t v) const noexcept {
  if (modulus_ == 0)
    return v;
  v %= modulus_;
  return v < 0 ? v + modulus_ : v;
}

std::string AbGroup::to_string() const {
  return "z" + std::to_string(modulus_) + "^" + std::to_string(rank_);
}

// --- vectors ----------------------------------------------------------------

AbVec zero(const AbGroup &a) { return AbVec{std::vector<std::int64_t>(a.rank(), 0)}; }

AbVec make_vec(const AbGroup &a, std::vector<std::int64_t> coords) {
  if (coords.size() != a.rank())
    throw StructuralError("vector has " + std::to_string(coords.size()) +
                          " coordinates, group rank is " + std::to_string(a.rank()));
  for (auto &c : coords)
    c = a.reduce(c);
  return AbVec{std::move(coords)};
}

namespace {

void require_rank(const AbGroup &a, const AbVec &x) {
  if (x.coords.size() != a.rank())
    throw StructuralError("vector rank does not match group " + a.to_string());
}

} // namespace

AbVec add(const AbGroup &a, const AbVec &x, const AbVec &y) {
  require_rank(a, x);
  require_rank(a, y);
  AbVec r = x;
  for (std::size_t i = 0; i < a.rank(); ++i)
    r.coords[i] = a.reduce(x.coords[i] + y.coords[i]);
  return r;
}

AbVec sub(const AbGroup &a, const AbVec &x, const AbVec &y) { return add(a, x, neg(a, y)); }

AbVec neg(const AbGroup &a, const AbVec &x) {
  require_rank(a, x);
  AbVec r = x;
  for (auto &c : r.coords)
    c = a.reduce(-c);
  return r;
}

std::size_t vec_rank(const AbGroup &a, const AbVec &x) {
  require_rank(a, x);
  std::size_t r = 0;
  for (auto c : x.coords)
    r = r * std::size_t(a.modulus()) + std::size_t(c);
  return r;
}

AbVec vec_unrank(const AbGroup &a, std::size_t r) {
  if (r >= a.order())
    throw StructuralError("vector rank out of range");
  AbVec x = zero(a);
  for (std::size_t i = a.rank(); i-- > 0;) {
    x.coords[i] = std::int64_t(r % std::size_t(a.modulus()));
    r /= std::size_t(a.modulus());
  }
  return x;
}

// --- matrices ---------------------------------------------------------------

ModMatrix::ModMatrix(const AbGroup &group, std::vector<std::int64_t> entries)
    : group_(group), entries_(std::move(entries)) {
  if (entries_.size() != group.rank() * group.rank())
    throw StructuralError("matrix needs " + std::to_string(group.rank() * group.rank()) +
                          " entries, got " + std::to_string(entries_.size()));
  for (auto &v : entries_)
    v = group.reduce(v);
}

ModMatrix ModMatrix::identity(const AbGroup &group) {
  std::vector<std::int64_t> e(group.rank() * group.rank(), 0);
  for (std::size_t i = 0; i < group.rank(); ++i)
    e[i * group.rank() + i] = 1;
  return ModMatrix(group, std::move(e));
}

ModMatrix ModMatrix::zero(const AbGroup &group) {
  return ModMatrix(group, std::vector<std::int64_t>(group.rank() * group.rank(), 0));
}

bool ModMatrix::is_identity() const { return *this == identity(group_); }

std::string ModMatrix::to_string() const {
  std::ostringstream s;
  for (std::size_t r = 0; r < dim(); ++r) {
    if (r)
      s << " |";
    for (std::size_t c = 0; c < dim(); ++c)
      s << (r == 0 && c == 0 ? "" : " ") << at(r, c);
  }
  return s.str();
}

namespace {

void require_same(const ModMatrix &m, const ModMatrix &n) {
  if (!(m.group() == n.group()))
    throw StructuralError("matrices over different groups: " + m.group().to_string() + " vs " +
                          n.group().to_string());
}

std::int64_t det_rec(const AbGroup &g, std::vector<std::int64_t> a, std::size_t k) {
  // Cofactor expansion along the first row; k stays small (≤ 8) here.
  if (k == 1)
    return g.reduce(a[0]);
  if (k == 2)
    return g.reduce(a[0] * a[3] - a[1] * a[2]);
  std::int64_t det = 0;
  std::vector<std::int64_t> minor((k - 1) * (k - 1));
  for (std::size_t c = 0; c < k; ++c) {
    if (a[c] == 0)
      continue;
    std::size_t idx = 0;
    for (std::size_t r = 1; r < k; ++r)
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c)
          minor[idx++] = a[r * k + cc];
    auto sub = det_rec(g, minor, k - 1);
    auto term = g.reduce(a[c] * sub);
    det = g.reduce(c % 2 == 0 ? det + term : det - term);
  }
  return det;
}

} // namespace

AbVec apply(const ModMatrix &m, const AbVec &x) {
  require_rank(m.group(), x);
  const auto k = m.dim();
  AbVec r = zero(m.group());
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < k; ++j)
      s = m.group().reduce(s + m.at(i, j) * x.coords[j]);
    r.coords[i] = s;
  }
  return r;
}

ModMatrix compose(const ModMatrix &m, const ModMatrix &n) {
  require_same(m, n);
  const auto k = m.dim();
  std::vector<std::int64_t> e(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t s = 0;
      for (std::size_t l = 0; l < k; ++l)
        s = m.group().reduce(s + m.at(i, l) * n.at(l, j));
      e[i * k + j] = s;
    }
  return ModMatrix(m.group(), std::move(e));
}

ModMatrix add(const ModMatrix &m, const ModMatrix &n) {
  require_same(m, n);
  auto e = m.entries();
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] += n.entries()[i];
  return ModMatrix(m.group(), std::move(e));
}

ModMatrix negate(const ModMatrix &m) {
  auto e = m.entries();
  for (auto &v : e)
    v = -v;
  return ModMatrix(m.group(), std::move(e));
}

ModMatrix sub(const ModMatrix &m, const ModMatrix &n) { return add(m, negate(n)); }

std::int64_t determinant(const ModMatrix &m) { return det_rec(m.group(), m.entries(), m.dim()); }

bool is_automorphism(const ModMatrix &m) {
  auto d = determinant(m);
  if (!m.group().is_finite())
    return d == 1 || d == -1;
  return std::gcd(d, m.group().modulus()) == 1;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0)
    old_r += m;
  while (r != 0) {
    auto q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1)
    throw AutomorphismError(std::to_string(a) + " is not a unit mod " + std::to_string(m));
  old_s %= m;
  return old_s < 0 ? old_s + m : old_s;
}

ModMatrix invert(const ModMatrix &m) {
  const auto &g = m.group();
  const auto k = m.dim();
  const auto det = determinant(m);
  std::int64_t det_inv = 0;
  if (g.is_finite()) {
    if (std::gcd(det, g.modulus()) != 1)
      throw AutomorphismError("matrix [" + m.to_string() + "] has determinant " +
                              std::to_string(det) + ", not a unit mod " +
                              std::to_string(g.modulus()));
    det_inv = mod_inverse(det, g.modulus());
  } else {
    if (det != 1 && det != -1)
      throw AutomorphismError("integer matrix [" + m.to_string() + "] has determinant " +
                              std::to_string(det));
    det_inv = det; // ±1 is its own inverse
  }
  if (k == 1)
    return ModMatrix(g, {det_inv});

  // adj(M)[j][i] = (-1)^{i+j} det(minor_ij)
  std::vector<std::int64_t> inv(k * k);
  std::vector<std::int64_t> minor((k - 1) * (k - 1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t idx = 0;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
          if (r != i && c != j)
            minor[idx++] = m.at(r, c);
      auto cof = det_rec(g, minor, k - 1);
      if ((i + j) % 2)
        cof = -cof;
      inv[j * k + i] = g.reduce(cof * det_inv);
    }
  return ModMatrix(g, std::move(inv));
}

ModMatrix random_automorphism(const AbGroup &group, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto k = group.rank();
  std::uniform_int_distribution<std::int64_t> dist =
      group.is_finite() ? std::uniform_int_distribution<std::int64_t>(0, group.modulus() - 1)
                        : std::uniform_int_distribution<std::int64_t>(-2, 2);
  for (;;) {
    std::vector<std::int64_t> e(k * k);
    for (auto &v : e)
      v = dist(rng);
    ModMatrix m(group, std::move(e));
    if (is_automorphism(m))
      return m;
  }
}

} // namespace loopkit
