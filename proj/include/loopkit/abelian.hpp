#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace loopkit {

/// Homocyclic abelian group (Z_m)^k. modulus 0 stands for the free module
/// Z^k, where automorphisms are the integer matrices of determinant ±1.
class AbGroup {
public:
  AbGroup(std::int64_t modulus, std::size_t rank);

  /// Parses "z<m>^<k>", e.g. "z3^2" or "z0^2". Throws StructuralError.
  static AbGroup parse(std::string_view spec);

  std::int64_t modulus() const noexcept { return modulus_; }
  std::size_t rank() const noexcept { return rank_; }
  bool is_finite() const noexcept { return modulus_ != 0; }

  /// m^k. Throws DomainError for Z^k.
  std::size_t order() const;

  std::int64_t reduce(std::int64_t v) const noexcept;

  std::string to_string() const;

  friend bool operator==(const AbGroup &, const AbGroup &) = default;

private:
  std::int64_t modulus_;
  std::size_t rank_;
};

/// Element of an AbGroup, coordinates reduced into [0, m).
struct AbVec {
  std::vector<std::int64_t> coords;

  friend bool operator==(const AbVec &, const AbVec &) = default;
  friend auto operator<=>(const AbVec &, const AbVec &) = default;
};

AbVec zero(const AbGroup &a);
/// Reduces every coordinate. Throws StructuralError on rank mismatch.
AbVec make_vec(const AbGroup &a, std::vector<std::int64_t> coords);
AbVec add(const AbGroup &a, const AbVec &x, const AbVec &y);
AbVec sub(const AbGroup &a, const AbVec &x, const AbVec &y);
AbVec neg(const AbGroup &a, const AbVec &x);

/// Lexicographic rank (first coordinate most significant) within the finite
/// group, and its inverse.
std::size_t vec_rank(const AbGroup &a, const AbVec &x);
AbVec vec_unrank(const AbGroup &a, std::size_t r);

/// A k×k matrix over Z_m. Used both for automorphisms and for the plain
/// endomorphisms that appear as sums of automorphisms; invertibility is a
/// property checked by is_automorphism, not an invariant of the type.
class ModMatrix {
public:
  ModMatrix() = default;
  /// Row-major entries, reduced mod m.
  ModMatrix(const AbGroup &group, std::vector<std::int64_t> entries);

  static ModMatrix identity(const AbGroup &group);
  static ModMatrix zero(const AbGroup &group);

  const AbGroup &group() const noexcept { return group_; }
  std::size_t dim() const noexcept { return group_.rank(); }
  std::int64_t at(std::size_t r, std::size_t c) const { return entries_[r * dim() + c]; }
  const std::vector<std::int64_t> &entries() const noexcept { return entries_; }

  bool is_identity() const;

  /// Rows separated by " | ", e.g. "1 1 | 0 1".
  std::string to_string() const;

  friend bool operator==(const ModMatrix &a, const ModMatrix &b) {
    return a.group_ == b.group_ && a.entries_ == b.entries_;
  }

private:
  AbGroup group_{2, 1};
  std::vector<std::int64_t> entries_;
};

AbVec apply(const ModMatrix &m, const AbVec &x);
/// compose(M, N) = M·N, so apply(compose(M,N), x) == apply(M, apply(N, x)).
ModMatrix compose(const ModMatrix &m, const ModMatrix &n);
ModMatrix add(const ModMatrix &m, const ModMatrix &n);
ModMatrix sub(const ModMatrix &m, const ModMatrix &n);
ModMatrix negate(const ModMatrix &m);

/// Determinant reduced mod m (exact integer determinant when m = 0).
std::int64_t determinant(const ModMatrix &m);

/// gcd(det, m) == 1, or det = ±1 over Z.
bool is_automorphism(const ModMatrix &m);

/// Adjugate times the inverse of the determinant. Throws AutomorphismError.
ModMatrix invert(const ModMatrix &m);

/// Rejection sampling over all k×k matrices mod m until one is invertible.
/// Over Z (m = 0) entries are drawn from [-2, 2]. Deterministic in `seed`.
ModMatrix random_automorphism(const AbGroup &group, std::uint64_t seed);

/// Modular inverse of a unit; throws AutomorphismError otherwise.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

} // namespace loopkit
