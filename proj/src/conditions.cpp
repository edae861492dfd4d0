#include "loopkit/conditions.hpp"

#include <functional>
#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit {

std::string_view property_name(PropertyKind p) {
  switch (p) {
  case PropertyKind::TwoSidedInverse: return "two-sided-inverse";
  case PropertyKind::LeftInverse: return "left-inverse";
  case PropertyKind::RightInverse: return "right-inverse";
  case PropertyKind::Monoassociative: return "monoassociative";
  case PropertyKind::LeftAlternative: return "left-alternative";
  case PropertyKind::RightAlternative: return "right-alternative";
  case PropertyKind::Flexible: return "flexible";
  case PropertyKind::LeftBol: return "left-bol";
  case PropertyKind::RightBol: return "right-bol";
  }
  return "?";
}

char condition_letter(PropertyKind p) {
  static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'J'};
  return letters[static_cast<int>(p)];
}

std::size_t property_arity(PropertyKind p) {
  switch (p) {
  case PropertyKind::TwoSidedInverse:
  case PropertyKind::Monoassociative: return 1;
  case PropertyKind::LeftBol:
  case PropertyKind::RightBol: return 3;
  default: return 2;
  }
}

std::optional<PropertyKind> parse_property(std::string_view s) {
  for (auto p : kAllProperties) {
    if (s == property_name(p))
      return p;
    if (s.size() == 1 && (s[0] == condition_letter(p) || s[0] == condition_letter(p) + 32))
      return p;
  }
  return std::nullopt;
}

PropertyKind mirror(PropertyKind p) {
  switch (p) {
  case PropertyKind::LeftInverse: return PropertyKind::RightInverse;
  case PropertyKind::RightInverse: return PropertyKind::LeftInverse;
  case PropertyKind::LeftAlternative: return PropertyKind::RightAlternative;
  case PropertyKind::RightAlternative: return PropertyKind::LeftAlternative;
  case PropertyKind::LeftBol: return PropertyKind::RightBol;
  case PropertyKind::RightBol: return PropertyKind::LeftBol;
  default: return p;
  }
}

bool needs_inverses(PropertyKind p) {
  return p == PropertyKind::TwoSidedInverse || p == PropertyKind::LeftInverse ||
         p == PropertyKind::RightInverse;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Holds: return "holds";
  case Verdict::Fails: return "fails";
  case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

std::string format_tuple(std::span<const Element> tuple) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i)
    s << (i ? "," : "") << tuple[i];
  s << ')';
  return s.str();
}

namespace {

/// Visits tuples of the given arity in lexicographic order until `ok`
/// returns false; returns that tuple.
std::optional<std::vector<Element>>
first_failure(std::size_t n, std::size_t arity,
              const std::function<bool(std::span<const Element>)> &ok) {
  std::vector<Element> t(arity, 0);
  for (;;) {
    if (!ok(t))
      return t;
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++t[i] < n)
        break;
      t[i] = 0;
      if (i == 0)
        return std::nullopt;
    }
    if (arity == 0)
      return std::nullopt;
  }
}

PropertyResult from_failure(std::optional<std::vector<Element>> f, std::string detail) {
  PropertyResult r;
  if (f) {
    r.holds = false;
    r.witness = std::move(*f);
    r.detail = std::move(detail);
  }
  return r;
}

} // namespace

std::optional<Element> two_sided_inverse(const FiniteLoop &loop, Element x) {
  const Element l = loop.left_inverse(x);
  if (l != loop.right_inverse(x))
    return std::nullopt;
  return l;
}

PropertyResult has_property(const FiniteLoop &L, PropertyKind p) {
  const auto n = L.order();
  auto m = [&](Element a, Element b) { return L.mul(a, b); };

  if (needs_inverses(p)) {
    auto f = first_failure(n, 1, [&](auto t) { return two_sided_inverse(L, t[0]).has_value(); });
    if (f)
      return from_failure(f, "e/x != x\\e");
    if (p == PropertyKind::TwoSidedInverse)
      return {};
  }

  switch (p) {
  case PropertyKind::TwoSidedInverse:
    return {};
  case PropertyKind::LeftInverse:
    return from_failure(first_failure(n, 2,
                                      [&](auto t) {
                                        auto x = t[0], y = t[1];
                                        return m(*two_sided_inverse(L, x), m(x, y)) == y;
                                      }),
                        "x^-1 * xy != y");
  case PropertyKind::RightInverse:
    return from_failure(first_failure(n, 2,
                                      [&](auto t) {
                                        auto x = t[0], y = t[1];
                                        return m(m(y, x), *two_sided_inverse(L, x)) == y;
                                      }),
                        "yx * x^-1 != y");
  case PropertyKind::Monoassociative:
    return from_failure(first_failure(n, 1,
                                      [&](auto t) {
                                        auto x = t[0];
                                        auto x2 = m(x, x);
                                        return m(x, x2) == m(x2, x);
                                      }),
                        "x * x^2 != x^2 * x");
  case PropertyKind::LeftAlternative:
    return from_failure(first_failure(n, 2,
                                      [&](auto t) {
                                        auto x = t[0], y = t[1];
                                        return m(x, m(x, y)) == m(m(x, x), y);
                                      }),
                        "x * xy != x^2 * y");
  case PropertyKind::RightAlternative:
    return from_failure(first_failure(n, 2,
                                      [&](auto t) {
                                        auto x = t[0], y = t[1];
                                        return m(m(y, x), x) == m(y, m(x, x));
                                      }),
                        "yx * x != y * x^2");
  case PropertyKind::Flexible:
    return from_failure(first_failure(n, 2,
                                      [&](auto t) {
                                        auto x = t[0], y = t[1];
                                        return m(x, m(y, x)) == m(m(x, y), x);
                                      }),
                        "x * yx != xy * x");
  case PropertyKind::LeftBol:
    return from_failure(first_failure(n, 3,
                                      [&](auto t) {
                                        auto x = t[0], y = t[1], z = t[2];
                                        return m(m(x, m(y, x)), z) == m(x, m(y, m(x, z)));
                                      }),
                        "(x * yx)z != x(y * xz)");
  case PropertyKind::RightBol:
    return from_failure(first_failure(n, 3,
                                      [&](auto t) {
                                        auto x = t[0], y = t[1], z = t[2];
                                        return m(z, m(m(x, y), x)) == m(m(m(z, x), y), x);
                                      }),
                        "z(xy * x) != (zx * y)x");
  }
  return {};
}

PropertyResult is_associative(const FiniteLoop &L) {
  return from_failure(first_failure(L.order(), 3,
                                    [&](auto t) {
                                      return L.mul(L.mul(t[0], t[1]), t[2]) ==
                                             L.mul(t[0], L.mul(t[1], t[2]));
                                    }),
                      "xy * z != x * yz");
}

PropertyResult is_commutative(const FiniteLoop &L) {
  return from_failure(
      first_failure(L.order(), 2, [&](auto t) { return L.mul(t[0], t[1]) == L.mul(t[1], t[0]); }),
      "xy != yx");
}

// --- cocycle conditions -----------------------------------------------------

std::vector<IdentitySides> cocycle_identities(const Cocycle &c, PropertyKind p,
                                              std::span<const Element> tuple) {
  if (tuple.size() != property_arity(p))
    throw StructuralError("cocycle identity for " + std::string(property_name(p)) + " takes " +
                          std::to_string(property_arity(p)) + " elements");
  const auto &L = c.base();
  auto m = [&](Element a, Element b) { return L.mul(a, b); };
  auto P = [&](Element a, Element b) -> const ModMatrix & { return c.P(a, b); };
  auto Q = [&](Element a, Element b) -> const ModMatrix & { return c.Q(a, b); };
  auto inv = [&](Element a) {
    auto i = two_sided_inverse(L, a);
    if (!i)
      throw DomainError("element " + std::to_string(a) + " has no two-sided inverse");
    return *i;
  };
  // Right-to-left products and sums, read as in the written identities.
  auto mul = [](const ModMatrix &a, const ModMatrix &b) { return compose(a, b); };
  auto mul3 = [&](const ModMatrix &a, const ModMatrix &b, const ModMatrix &d) {
    return compose(a, compose(b, d));
  };
  auto plus = [](const ModMatrix &a, const ModMatrix &b) { return add(a, b); };

  const Element xi = tuple[0];
  switch (p) {
  case PropertyKind::TwoSidedInverse: {
    const Element i = inv(xi);
    return {{"P(x,x^-1) = Q(x,x^-1) P(x^-1,x)^-1 Q(x^-1,x)", P(xi, i),
             mul3(Q(xi, i), invert(P(i, xi)), Q(i, xi))}};
  }
  case PropertyKind::LeftInverse: {
    const Element eta = tuple[1], i = inv(xi), xe = m(xi, eta);
    return {{"Q(x^-1,xy) = Q(x,y)^-1", Q(i, xe), invert(Q(xi, eta))},
            {"P(x^-1,xy) = Q(x,y)^-1 P(x,y) Q(x^-1,x)^-1 P(x^-1,x)", P(i, xe),
             mul(mul(invert(Q(xi, eta)), P(xi, eta)), mul(invert(Q(i, xi)), P(i, xi)))}};
  }
  case PropertyKind::RightInverse: {
    const Element eta = tuple[1], j = inv(eta), xe = m(xi, eta);
    return {{"P(xy,y^-1) = P(x,y)^-1", P(xe, j), invert(P(xi, eta))},
            {"Q(xy,y^-1) = P(x,y)^-1 Q(x,y) P(y,y^-1)^-1 Q(y,y^-1)", Q(xe, j),
             mul(mul(invert(P(xi, eta)), Q(xi, eta)), mul(invert(P(eta, j)), Q(eta, j)))}};
  }
  case PropertyKind::Monoassociative: {
    const Element s = m(xi, xi);
    const auto S = plus(P(xi, xi), Q(xi, xi));
    return {{"P(x,x^2) + Q(x,x^2)S = P(x^2,x)S + Q(x^2,x)", plus(P(xi, s), mul(Q(xi, s), S)),
             plus(mul(P(s, xi), S), Q(s, xi))}};
  }
  case PropertyKind::LeftAlternative: {
    const Element eta = tuple[1], s = m(xi, xi), xe = m(xi, eta);
    const auto S = plus(P(xi, xi), Q(xi, xi));
    return {{"Q(x,xy)Q(x,y) = Q(x^2,y)", mul(Q(xi, xe), Q(xi, eta)), Q(s, eta)},
            {"P(x,xy) + Q(x,xy)P(x,y) = P(x^2,y)S", plus(P(xi, xe), mul(Q(xi, xe), P(xi, eta))),
             mul(P(s, eta), S)}};
  }
  case PropertyKind::RightAlternative: {
    const Element eta = tuple[1], s = m(xi, xi), ex = m(eta, xi);
    const auto S = plus(P(xi, xi), Q(xi, xi));
    return {{"P(yx,x)P(y,x) = P(y,x^2)", mul(P(ex, xi), P(eta, xi)), P(eta, s)},
            {"P(yx,x)Q(y,x) + Q(yx,x) = Q(y,x^2)S", plus(mul(P(ex, xi), Q(eta, xi)), Q(ex, xi)),
             mul(Q(eta, s), S)}};
  }
  case PropertyKind::Flexible: {
    const Element eta = tuple[1], ex = m(eta, xi), xe = m(xi, eta);
    return {{"Q(x,yx)P(y,x) = P(xy,x)Q(x,y)", mul(Q(xi, ex), P(eta, xi)),
             mul(P(xe, xi), Q(xi, eta))},
            {"P(x,yx) + Q(x,yx)Q(y,x) = P(xy,x)P(x,y) + Q(xy,x)",
             plus(P(xi, ex), mul(Q(xi, ex), Q(eta, xi))),
             plus(mul(P(xe, xi), P(xi, eta)), Q(xe, xi))}};
  }
  case PropertyKind::LeftBol: {
    const Element eta = tuple[1], zeta = tuple[2];
    const Element xz = m(xi, zeta), u = m(eta, xz), ex = m(eta, xi), v = m(xi, ex);
    return {{"Q(x,y*xz)Q(y,xz)Q(x,z) = Q(x*yx,z)", mul3(Q(xi, u), Q(eta, xz), Q(xi, zeta)),
             Q(v, zeta)},
            {"Q(x,y*xz)P(y,xz) = P(x*yx,z)Q(x,yx)P(y,x)", mul(Q(xi, u), P(eta, xz)),
             mul3(P(v, zeta), Q(xi, ex), P(eta, xi))},
            {"P(x,y*xz) + Q(x,y*xz)Q(y,xz)P(x,z) = P(x*yx,z)(P(x,yx) + Q(x,yx)Q(y,x))",
             plus(P(xi, u), mul3(Q(xi, u), Q(eta, xz), P(xi, zeta))),
             mul(P(v, zeta), plus(P(xi, ex), mul(Q(xi, ex), Q(eta, xi))))}};
  }
  case PropertyKind::RightBol: {
    const Element eta = tuple[1], zeta = tuple[2];
    const Element xe = m(xi, eta), w = m(xe, xi), zx = m(zeta, xi), t = m(zx, eta);
    return {{"P(z,xy*x) = P(zx*y,x)P(zx,y)P(z,x)", P(zeta, w),
             mul3(P(t, xi), P(zx, eta), P(zeta, xi))},
            {"Q(z,xy*x)P(xy,x)Q(x,y) = P(zx*y,x)Q(zx,y)", mul3(Q(zeta, w), P(xe, xi), Q(xi, eta)),
             mul(P(t, xi), Q(zx, eta))},
            {"Q(z,xy*x)(P(xy,x)P(x,y) + Q(xy,x)) = P(zx*y,x)P(zx,y)Q(z,x) + Q(zx*y,x)",
             mul(Q(zeta, w), plus(mul(P(xe, xi), P(xi, eta)), Q(xe, xi))),
             plus(mul3(P(t, xi), P(zx, eta), Q(zeta, xi)), Q(t, xi))}};
  }
  }
  return {};
}

ConditionResult check_cocycle_condition(const Cocycle &c, PropertyKind p) {
  const auto &L = c.base();
  const auto n = L.order();
  ConditionResult r;
  if (needs_inverses(p)) {
    auto f = first_failure(n, 1, [&](auto t) { return two_sided_inverse(L, t[0]).has_value(); });
    if (f) {
      r.verdict = Verdict::NotApplicable;
      r.witness = *f;
      r.detail = "element " + std::to_string((*f)[0]) + " has no two-sided inverse in the base";
      return r;
    }
  }
  std::string failed;
  auto f = first_failure(n, property_arity(p), [&](auto t) {
    for (const auto &side : cocycle_identities(c, p, t))
      if (!(side.lhs == side.rhs)) {
        failed = side.label;
        return false;
      }
    return true;
  });
  if (f) {
    r.verdict = Verdict::Fails;
    r.witness = *f;
    r.detail = failed;
  }
  return r;
}

// --- audit ------------------------------------------------------------------

AuditReport equivalence_audit(const Cocycle &c, const FiniteLoop &extension, PropertyKind p) {
  AuditReport r;
  r.property = p;
  auto base = has_property(c.base(), p);
  r.base_has = base.holds;
  if (!base.holds)
    r.witnesses.push_back("base:" + format_tuple(base.witness));
  auto cond = check_cocycle_condition(c, p);
  r.condition = cond.verdict;
  if (cond.verdict != Verdict::Holds)
    r.witnesses.push_back("condition:" + format_tuple(cond.witness));
  auto ext = has_property(extension, p);
  r.extension_has = ext.holds;
  if (!ext.holds)
    r.witnesses.push_back("extension:" + format_tuple(ext.witness));
  r.consistent = r.extension_has == (r.base_has && r.condition_holds());
  return r;
}

AuditReport equivalence_audit(const Cocycle &c, PropertyKind p, std::size_t cap) {
  return equivalence_audit(c, build_extension(c, cap), p);
}

std::string format_audit(const AuditReport &r) {
  std::ostringstream s;
  s << "property=" << property_name(r.property) << " base=" << (r.base_has ? 1 : 0)
    << " condition=" << verdict_name(r.condition) << " extension=" << (r.extension_has ? 1 : 0)
    << " iff=" << (r.consistent ? "ok" : "VIOLATION");
  if (!r.witnesses.empty()) {
    s << " witness=";
    for (std::size_t i = 0; i < r.witnesses.size(); ++i)
      s << (i ? ";" : "") << r.witnesses[i];
  }
  return s.str();
}

} // namespace loopkit
