#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "loopkit/abelian.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/finite_loop.hpp"
#include "loopkit/mapping_groups.hpp"

namespace loopkit {

// --- T-quasigroups ----------------------------------------------------------

/// x·y = φ(x) + ψ(y) + c over an abelian group.
struct TQuasigroupParams {
  AbGroup group;
  ModMatrix phi;
  ModMatrix psi;
  AbVec c;
};

/// Throws AutomorphismError unless φ and ψ are invertible.
void validate_params(const TQuasigroupParams &params);

AbVec t_mul(const TQuasigroupParams &params, const AbVec &x, const AbVec &y);
/// x\y = ψ⁻¹(y − φx − c)
AbVec t_ldiv(const TQuasigroupParams &params, const AbVec &x, const AbVec &y);
/// y/x = φ⁻¹(y − ψx − c)
AbVec t_rdiv(const TQuasigroupParams &params, const AbVec &y, const AbVec &x);

/// Cayley table over the group elements in vec_rank order.
CayleyTable t_quasigroup(const TQuasigroupParams &params);

// --- loop cocycles and linear abelian extensions ----------------------------

/// A pair of maps P, Q : L×L → Aut(A), stored densely.
///
/// The constructor only checks shapes; use validate_cocycle for the
/// normalization P(ξ,0) = Q(0,η) = I and automorphism membership.
class Cocycle {
public:
  Cocycle(FiniteLoop base, AbGroup kernel, std::vector<ModMatrix> p, std::vector<ModMatrix> q);

  const FiniteLoop &base() const noexcept { return base_; }
  const AbGroup &kernel() const noexcept { return kernel_; }
  std::size_t order() const noexcept { return base_.order(); }

  const ModMatrix &P(Element xi, Element eta) const { return p_[xi * order() + eta]; }
  const ModMatrix &Q(Element xi, Element eta) const { return q_[xi * order() + eta]; }

  const std::vector<ModMatrix> &p_table() const noexcept { return p_; }
  const std::vector<ModMatrix> &q_table() const noexcept { return q_; }

  friend bool operator==(const Cocycle &, const Cocycle &) = default;

private:
  FiniteLoop base_;
  AbGroup kernel_;
  std::vector<ModMatrix> p_;
  std::vector<ModMatrix> q_;
};

ValidationReport validate_cocycle(const Cocycle &c);

/// P ≡ Q ≡ I, whose extension is the direct product L × A.
Cocycle identity_cocycle(const FiniteLoop &base, const AbGroup &kernel);

/// Entrywise random_automorphism, then P(·,0) := I and Q(0,·) := I.
Cocycle random_cocycle(const FiniteLoop &base, const AbGroup &kernel, std::uint64_t seed);

/// The cocycle of the opposite extension over the opposite base:
/// P*(ξ,η) = Q(η,ξ), Q*(ξ,η) = P(η,ξ), since (ξ,x)⋆(η,y) = (η,y)·(ξ,x).
Cocycle opposite_cocycle(const Cocycle &c);

struct ExtElement {
  Element base;
  AbVec fiber;

  friend bool operator==(const ExtElement &, const ExtElement &) = default;
};

/// (ξ,x)·(η,y) = (ξη, P(ξ,η)x + Q(ξ,η)y)
ExtElement ext_mul(const Cocycle &c, const ExtElement &a, const ExtElement &b);
/// (ξ,x)\(η,y) = (ξ\η, Q(ξ,ξ\η)⁻¹(y − P(ξ,ξ\η)x))
ExtElement ext_ldiv(const Cocycle &c, const ExtElement &a, const ExtElement &b);
/// (η,y)/(ξ,x) = (η/ξ, P(η/ξ,ξ)⁻¹(y − Q(η/ξ,ξ)x))
ExtElement ext_rdiv(const Cocycle &c, const ExtElement &b, const ExtElement &a);

inline constexpr std::size_t kDefaultExtensionCap = 10'000;

/// Index of a pair in a materialized extension: base·|A| + vec_rank(fiber).
Element ext_index(const Cocycle &c, const ExtElement &a);
ExtElement ext_element(const Cocycle &c, Element index);

/// Materializes F(P,Q) as a Cayley table (base-major order). The identity
/// (0,0) lands on index 0. Throws ResourceError above `cap` elements and
/// DomainError for an infinite kernel.
FiniteLoop build_extension(const Cocycle &c, std::size_t cap = kDefaultExtensionCap);

// --- homomorphisms Inn(L) → Aut(A) ------------------------------------------

/// A verified homomorphism from a permutation group into Aut(A).
class PhiHom {
public:
  const PermGroup &domain() const noexcept { return domain_; }
  const AbGroup &kernel() const noexcept { return kernel_; }

  /// Φ(p). Throws ConsistencyError if p is outside the domain.
  const ModMatrix &operator()(const Perm &p) const;
  const std::vector<ModMatrix> &images() const noexcept { return images_; }

private:
  PhiHom(PermGroup domain, AbGroup kernel, std::vector<ModMatrix> images)
      : domain_(std::move(domain)), kernel_(std::move(kernel)), images_(std::move(images)) {}

  friend PhiHom phi_from_generators(const PermGroup &, const AbGroup &,
                                    const std::vector<std::pair<Perm, ModMatrix>> &);

  PermGroup domain_;
  AbGroup kernel_;
  std::vector<ModMatrix> images_; // parallel to domain_.elements()
};

/// Thrown when generator images do not extend to a homomorphism.
class HomomorphismError : public AutomorphismError {
public:
  HomomorphismError(const std::string &what, Perm first, Perm second)
      : AutomorphismError(what), first_(std::move(first)), second_(std::move(second)) {}

  /// The pair of domain elements whose images violate multiplicativity, or a
  /// single element reached by two words with different images (then
  /// first == second).
  const Perm &first() const noexcept { return first_; }
  const Perm &second() const noexcept { return second_; }

private:
  Perm first_, second_;
};

/// Extends generator images multiplicatively over words (breadth-first) and
/// verifies the full homomorphism property on the closure.
///
/// Throws AutomorphismError for a non-invertible image, StructuralError for
/// a generator outside `inn`, DomainError ("coverage") if the generators do
/// not generate `inn`, HomomorphismError on any inconsistency.
PhiHom phi_from_generators(const PermGroup &inn, const AbGroup &kernel,
                           const std::vector<std::pair<Perm, ModMatrix>> &assignments);

/// P(ξ,η) = Φ(λ_{ξη}⁻¹ ρ_η λ_ξ), Q(ξ,η) = Φ(λ_{ξη}⁻¹ λ_ξ λ_η).
Cocycle tangent_like_cocycle(const FiniteLoop &loop, const PhiHom &phi);

} // namespace loopkit
