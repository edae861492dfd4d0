#include <functional>
#include <initializer_list>

#include "loopkit/conditions.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/mapping_groups.hpp"

namespace loopkit {

namespace {

/// Translations of a loop and their inverses, built once per check.
class Translations {
public:
  explicit Translations(const FiniteLoop &loop) : loop_(loop) {
    for (Element x = 0; x < loop.order(); ++x) {
      lam_.push_back(loop.left_translation(x));
      rho_.push_back(loop.right_translation(x));
      lam_inv_.push_back(invert(lam_.back()));
      rho_inv_.push_back(invert(rho_.back()));
    }
  }

  const Perm &L(Element x) const { return lam_[x]; }
  const Perm &R(Element x) const { return rho_[x]; }
  const Perm &Li(Element x) const { return lam_inv_[x]; }
  const Perm &Ri(Element x) const { return rho_inv_[x]; }
  Element mul(Element a, Element b) const { return loop_.mul(a, b); }
  const FiniteLoop &loop() const { return loop_; }

  /// Product of the factors, rightmost acting first.
  static Perm word(std::initializer_list<std::reference_wrapper<const Perm>> factors) {
    auto it = factors.end();
    Perm out = *--it;
    while (it != factors.begin())
      out = compose(*--it, out);
    return out;
  }

private:
  const FiniteLoop &loop_;
  std::vector<Perm> lam_, rho_, lam_inv_, rho_inv_;
};

ModMatrix image(const PhiHom &phi, const Perm &w, const char *side) {
  if (!w.fixes(0))
    throw ConsistencyError(std::string("translation word on the ") + side +
                           " does not fix the identity: [" + w.to_string() + "]");
  return phi(w);
}

ModMatrix image_sum(const PhiHom &phi, std::initializer_list<Perm> words, const char *side) {
  auto it = words.begin();
  ModMatrix out = image(phi, *it, side);
  for (++it; it != words.end(); ++it)
    out = add(out, image(phi, *it, side));
  return out;
}

Element inverse_of(const FiniteLoop &loop, Element x) {
  auto i = two_sided_inverse(loop, x);
  if (!i)
    throw DomainError("element " + std::to_string(x) + " has no two-sided inverse");
  return *i;
}

} // namespace

IdentitySides tangent_like_identity(const FiniteLoop &loop, const PhiHom &phi, PropertyKind p,
                                    std::span<const Element> tuple) {
  if (tuple.size() != property_arity(p))
    throw StructuralError("tangent-like identity for " + std::string(property_name(p)) +
                          " takes " + std::to_string(property_arity(p)) + " elements");
  Translations t(loop);
  auto w = [](std::initializer_list<std::reference_wrapper<const Perm>> f) {
    return Translations::word(f);
  };
  auto m = [&](Element a, Element b) { return t.mul(a, b); };
  const char *l = "left", *r = "right";
  const Element x = tuple[0];

  switch (p) {
  case PropertyKind::TwoSidedInverse: {
    const Element i = inverse_of(loop, x);
    return {"Phi(R[x^-1] L[x]) = Phi(L[x] R[x]^-1 L[x^-1] L[x])",
            image(phi, w({t.R(i), t.L(x)}), l),
            image(phi, w({t.L(x), t.Ri(x), t.L(i), t.L(x)}), r)};
  }
  case PropertyKind::LeftInverse: {
    const Element y = tuple[1], xy = m(x, y);
    return {"Phi(L[y]^-1 R[xy] L[x]^-1) = Phi(L[y]^-1 L[x]^-1 R[y] L[x] R[x] L[x]^-1)",
            image(phi, w({t.Li(y), t.R(xy), t.Li(x)}), l),
            image(phi, w({t.Li(y), t.Li(x), t.R(y), t.L(x), t.R(x), t.Li(x)}), r)};
  }
  case PropertyKind::RightInverse: {
    const Element y = tuple[1], j = inverse_of(loop, y), xy = m(x, y);
    return {"Phi(L[x]^-1 L[xy] L[y^-1]) = Phi(L[x]^-1 R[y]^-1 L[x] R[y] L[y] L[y^-1])",
            image(phi, w({t.Li(x), t.L(xy), t.L(j)}), l),
            image(phi, w({t.Li(x), t.Ri(y), t.L(x), t.R(y), t.L(y), t.L(j)}), r)};
  }
  case PropertyKind::Monoassociative: {
    const Element s = m(x, x), c = m(x, s);
    return {"Phi(L[x^3]^-1 R[x^2] L[x]) + ... (monoassociative)",
            image_sum(phi,
                      {w({t.Li(c), t.R(s), t.L(x)}), w({t.Li(c), t.L(x), t.R(x), t.L(x)}),
                       w({t.Li(c), t.L(x), t.L(x), t.L(x)})},
                      l),
            image_sum(phi,
                      {w({t.Li(c), t.R(x), t.R(x), t.L(x)}), w({t.Li(c), t.R(x), t.L(x), t.L(x)}),
                       w({t.Li(c), t.L(s), t.L(x)})},
                      r)};
  }
  case PropertyKind::LeftAlternative: {
    const Element y = tuple[1], xy = m(x, y), a = m(x, xy), b = m(m(x, x), y);
    return {"Phi(L[x.xy]^-1 R[xy] L[x]) + Phi(L[x.xy]^-1 L[x] R[y] L[x]) = "
            "Phi(L[x^2 y]^-1 R[y] R[x] L[x]) + Phi(L[x^2 y]^-1 R[y] L[x] L[x])",
            image_sum(phi, {w({t.Li(a), t.R(xy), t.L(x)}), w({t.Li(a), t.L(x), t.R(y), t.L(x)})},
                      l),
            image_sum(phi,
                      {w({t.Li(b), t.R(y), t.R(x), t.L(x)}), w({t.Li(b), t.R(y), t.L(x), t.L(x)})},
                      r)};
  }
  case PropertyKind::RightAlternative: {
    const Element y = tuple[1], yx = m(y, x), a = m(yx, x), b = m(y, m(x, x));
    return {"Phi(L[yx.x]^-1 R[x] L[y] L[x]) + Phi(L[yx.x]^-1 L[yx] L[x]) = "
            "Phi(L[y x^2]^-1 L[y] R[x] L[x]) + Phi(L[y x^2]^-1 L[y] L[x] L[x])",
            image_sum(phi, {w({t.Li(a), t.R(x), t.L(y), t.L(x)}), w({t.Li(a), t.L(yx), t.L(x)})},
                      l),
            image_sum(phi,
                      {w({t.Li(b), t.L(y), t.R(x), t.L(x)}), w({t.Li(b), t.L(y), t.L(x), t.L(x)})},
                      r)};
  }
  case PropertyKind::Flexible: {
    const Element y = tuple[1], yx = m(y, x), xy = m(x, y), a = m(x, yx), b = m(xy, x);
    return {"Phi(L[x.yx]^-1 R[yx] L[x]) + Phi(L[x.yx]^-1 L[x] L[y] L[x]) = "
            "Phi(L[xy.x]^-1 R[x] R[y] L[x]) + Phi(L[xy.x]^-1 L[xy] L[x])",
            image_sum(phi, {w({t.Li(a), t.R(yx), t.L(x)}), w({t.Li(a), t.L(x), t.L(y), t.L(x)})},
                      l),
            image_sum(phi, {w({t.Li(b), t.R(x), t.R(y), t.L(x)}), w({t.Li(b), t.L(xy), t.L(x)})},
                      r)};
  }
  case PropertyKind::LeftBol: {
    const Element y = tuple[1], z = tuple[2];
    const Element xz = m(x, z), u = m(y, xz), a = m(x, u), yx = m(y, x), b = m(m(x, yx), z);
    return {"Phi(L[x(y.xz)]^-1 R[y.xz] L[x]) + Phi(L[x(y.xz)]^-1 L[x] L[y] R[z] L[x]) = "
            "Phi(L[(x.yx)z]^-1 R[z] R[yx] L[x]) + Phi(L[(x.yx)z]^-1 R[z] L[x] L[y] L[x])",
            image_sum(phi,
                      {w({t.Li(a), t.R(u), t.L(x)}), w({t.Li(a), t.L(x), t.L(y), t.R(z), t.L(x)})},
                      l),
            image_sum(phi,
                      {w({t.Li(b), t.R(z), t.R(yx), t.L(x)}),
                       w({t.Li(b), t.R(z), t.L(x), t.L(y), t.L(x)})},
                      r)};
  }
  case PropertyKind::RightBol: {
    const Element y = tuple[1], z = tuple[2];
    const Element xy = m(x, y), a = m(z, m(xy, x)), zxy = m(m(z, x), y), b = m(zxy, x);
    return {"Phi(L[z(xy.x)]^-1 L[z] R[x] R[y] L[x]) + Phi(L[z(xy.x)]^-1 L[z] L[xy] L[x]) = "
            "Phi(L[(zx.y)x]^-1 R[x] R[y] L[z] L[x]) + Phi(L[(zx.y)x]^-1 L[zx.y] L[x])",
            image_sum(phi,
                      {w({t.Li(a), t.L(z), t.R(x), t.R(y), t.L(x)}),
                       w({t.Li(a), t.L(z), t.L(xy), t.L(x)})},
                      l),
            image_sum(phi,
                      {w({t.Li(b), t.R(x), t.R(y), t.L(z), t.L(x)}), w({t.Li(b), t.L(zxy), t.L(x)})},
                      r)};
  }
  }
  throw StructuralError("unknown property");
}

ConditionResult check_tangent_like_condition(const FiniteLoop &loop, const PhiHom &phi,
                                             PropertyKind p) {
  if (phi.domain().degree() != loop.order())
    throw StructuralError("Phi domain has degree " + std::to_string(phi.domain().degree()) +
                          ", loop has order " + std::to_string(loop.order()));
  ConditionResult r;
  auto base = has_property(loop, p);
  if (!base.holds) {
    r.verdict = Verdict::NotApplicable;
    r.witness = base.witness;
    r.detail = "base loop is not " + std::string(property_name(p));
    return r;
  }
  const auto n = loop.order();
  const auto arity = property_arity(p);
  std::vector<Element> tuple(arity, 0);
  for (;;) {
    auto sides = tangent_like_identity(loop, phi, p, tuple);
    if (!(sides.lhs == sides.rhs)) {
      r.verdict = Verdict::Fails;
      r.witness = tuple;
      r.detail = sides.label;
      return r;
    }
    std::size_t i = arity;
    bool done = true;
    while (i > 0) {
      --i;
      if (++tuple[i] < n) {
        done = false;
        break;
      }
      tuple[i] = 0;
    }
    if (done)
      return r;
  }
}

} // namespace loopkit
