#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loopkit/extensions.hpp"
#include "loopkit/finite_loop.hpp"

namespace loopkit {

/// The weak inverse and weak associative properties.
enum class PropertyKind {
  TwoSidedInverse,
  LeftInverse,
  RightInverse,
  Monoassociative,
  LeftAlternative,
  RightAlternative,
  Flexible,
  LeftBol,
  RightBol,
};

inline constexpr std::array<PropertyKind, 9> kAllProperties = {
    PropertyKind::TwoSidedInverse,  PropertyKind::LeftInverse,     PropertyKind::RightInverse,
    PropertyKind::Monoassociative,  PropertyKind::LeftAlternative, PropertyKind::RightAlternative,
    PropertyKind::Flexible,         PropertyKind::LeftBol,         PropertyKind::RightBol,
};

/// Kebab-case name, e.g. "left-bol".
std::string_view property_name(PropertyKind p);
/// Letter of the matching cocycle condition: A, B, C, D, E, F, G, H, J.
char condition_letter(PropertyKind p);
/// Number of free variables in the identity (1, 2 or 3).
std::size_t property_arity(PropertyKind p);
/// Accepts the kebab-case name or the condition letter.
std::optional<PropertyKind> parse_property(std::string_view s);
/// The property of the opposite loop that corresponds to p (left <-> right).
PropertyKind mirror(PropertyKind p);
/// TwoSidedInverse, LeftInverse and RightInverse need x⁻¹ in the base.
bool needs_inverses(PropertyKind p);

/// Outcome of an exhaustive check. On failure `witness` is the
/// lexicographically first failing tuple (x, y, z order).
struct PropertyResult {
  bool holds = true;
  std::vector<Element> witness;
  std::string detail;
};

PropertyResult has_property(const FiniteLoop &loop, PropertyKind p);
PropertyResult is_associative(const FiniteLoop &loop);
PropertyResult is_commutative(const FiniteLoop &loop);

/// The two-sided inverse of x, if e/x == x\e.
std::optional<Element> two_sided_inverse(const FiniteLoop &loop, Element x);

enum class Verdict { Holds, Fails, NotApplicable };
std::string_view verdict_name(Verdict v);

struct ConditionResult {
  Verdict verdict = Verdict::Holds;
  std::vector<Element> witness; // (ξ, η, ζ) prefix
  std::string detail;

  bool holds() const noexcept { return verdict == Verdict::Holds; }
};

/// Both sides of one matrix identity of a cocycle condition, evaluated at a
/// fixed tuple. Sums of automorphisms are plain matrices.
struct IdentitySides {
  std::string label;
  ModMatrix lhs;
  ModMatrix rhs;
};

/// Evaluates the identities of the cocycle condition for property p at one
/// tuple (length property_arity(p)). For A, B, C the base must have
/// two-sided inverses of the tuple elements involved; throws DomainError
/// otherwise.
std::vector<IdentitySides> cocycle_identities(const Cocycle &c, PropertyKind p,
                                              std::span<const Element> tuple);

/// Checks the cocycle condition for p over every tuple. Conditions A, B, C
/// are NotApplicable when some base element lacks a two-sided inverse.
ConditionResult check_cocycle_condition(const Cocycle &c, PropertyKind p);

/// Evaluates the Φ-identities that characterize p on the tangent-like
/// extension Φ(L, A), over every tuple. Each side is a sum of Φ applied to
/// words in translations; every word must fix 0, which holds whenever L has
/// p. Returns NotApplicable when L does not have p.
ConditionResult check_tangent_like_condition(const FiniteLoop &loop, const PhiHom &phi,
                                             PropertyKind p);

/// Φ-identity of the tangent-like condition at one tuple.
/// Throws ConsistencyError if a word does not fix 0.
IdentitySides tangent_like_identity(const FiniteLoop &loop, const PhiHom &phi, PropertyKind p,
                                    std::span<const Element> tuple);

struct AuditReport {
  PropertyKind property;
  bool base_has = false;
  Verdict condition = Verdict::Holds;
  bool extension_has = false;
  /// extension_has == (base_has && condition == Holds)
  bool consistent = true;
  std::vector<std::string> witnesses;

  bool condition_holds() const noexcept { return condition == Verdict::Holds; }
};

/// Computes the base property, the cocycle condition and the property of the
/// materialized extension, and records whether they satisfy
/// extension ⇔ base ∧ condition.
AuditReport equivalence_audit(const Cocycle &c, PropertyKind p,
                              std::size_t cap = kDefaultExtensionCap);

/// Same, reusing an already materialized extension and base result.
AuditReport equivalence_audit(const Cocycle &c, const FiniteLoop &extension, PropertyKind p);

/// One-line "key=value" rendering of an audit.
std::string format_audit(const AuditReport &r);

std::string format_tuple(std::span<const Element> tuple);

} // namespace loopkit
