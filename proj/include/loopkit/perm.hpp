#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace loopkit {

/// Index of an element of a finite loop or quasigroup. The identity of a
/// loop is always 0.
using Element = std::uint32_t;

/// A permutation of {0, ..., n-1} stored as its image array.
class Perm {
public:
  Perm() = default;

  /// Throws StructuralError unless `images` is a bijection of {0..n-1}.
  explicit Perm(std::vector<Element> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator()(Element x) const { return images_[x]; }
  const std::vector<Element> &images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool fixes(Element x) const { return images_[x] == x; }

  /// Space-separated image array, e.g. "0 2 1".
  std::string to_string() const;

  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &, const Perm &) = default;

private:
  struct Unchecked {};
  Perm(std::vector<Element> images, Unchecked) : images_(std::move(images)) {}

  friend Perm compose(const Perm &p, const Perm &q);
  friend Perm invert(const Perm &p);

  std::vector<Element> images_;
};

/// p after q: compose(p, q)(x) == p(q(x)). The rightmost factor acts first,
/// matching how translation words like λ⁻¹ ρ λ are read.
Perm compose(const Perm &p, const Perm &q);

Perm invert(const Perm &p);

/// Parity of the permutation: 0 for even, 1 for odd.
int parity(const Perm &p);

} // namespace loopkit
