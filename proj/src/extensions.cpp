#include "loopkit/extensions.hpp"

#include <deque>
#include <optional>
#include <random>

#include "loopkit/errors.hpp"

namespace loopkit {

// --- T-quasigroups ----------------------------------------------------------

void validate_params(const TQuasigroupParams &params) {
  if (!(params.phi.group() == params.group) || !(params.psi.group() == params.group) ||
      params.c.coords.size() != params.group.rank())
    throw StructuralError("T-quasigroup parameters do not match group " +
                          params.group.to_string());
  if (!is_automorphism(params.phi))
    throw AutomorphismError("phi is not an automorphism");
  if (!is_automorphism(params.psi))
    throw AutomorphismError("psi is not an automorphism");
}

AbVec t_mul(const TQuasigroupParams &p, const AbVec &x, const AbVec &y) {
  return add(p.group, add(p.group, apply(p.phi, x), apply(p.psi, y)), p.c);
}

AbVec t_ldiv(const TQuasigroupParams &p, const AbVec &x, const AbVec &y) {
  auto rhs = sub(p.group, sub(p.group, y, apply(p.phi, x)), p.c);
  return apply(invert(p.psi), rhs);
}

AbVec t_rdiv(const TQuasigroupParams &p, const AbVec &y, const AbVec &x) {
  auto rhs = sub(p.group, sub(p.group, y, apply(p.psi, x)), p.c);
  return apply(invert(p.phi), rhs);
}

CayleyTable t_quasigroup(const TQuasigroupParams &params) {
  validate_params(params);
  const auto n = params.group.order();
  std::vector<Element> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto x = vec_unrank(params.group, i);
    for (std::size_t j = 0; j < n; ++j)
      entries[i * n + j] = Element(vec_rank(params.group, t_mul(params, x, vec_unrank(params.group, j))));
  }
  return CayleyTable(n, std::move(entries));
}

// --- cocycles ---------------------------------------------------------------

Cocycle::Cocycle(FiniteLoop base, AbGroup kernel, std::vector<ModMatrix> p,
                 std::vector<ModMatrix> q)
    : base_(std::move(base)), kernel_(std::move(kernel)), p_(std::move(p)), q_(std::move(q)) {
  const auto cells = base_.order() * base_.order();
  if (p_.size() != cells || q_.size() != cells)
    throw StructuralError("cocycle tables must have n*n = " + std::to_string(cells) + " entries");
  for (const auto *table : {&p_, &q_})
    for (const auto &m : *table)
      if (!(m.group() == kernel_))
        throw StructuralError("cocycle entry over " + m.group().to_string() +
                              ", kernel is " + kernel_.to_string());
}

ValidationReport validate_cocycle(const Cocycle &c) {
  ValidationReport report;
  const auto n = Element(c.order());
  for (Element xi = 0; xi < n; ++xi)
    if (!c.P(xi, 0).is_identity())
      report.fail("P(" + std::to_string(xi) + ",0) is not the identity");
  for (Element eta = 0; eta < n; ++eta)
    if (!c.Q(0, eta).is_identity())
      report.fail("Q(0," + std::to_string(eta) + ") is not the identity");
  for (Element xi = 0; xi < n; ++xi)
    for (Element eta = 0; eta < n; ++eta) {
      if (!is_automorphism(c.P(xi, eta)))
        report.fail("P(" + std::to_string(xi) + "," + std::to_string(eta) +
                    ") is not an automorphism");
      if (!is_automorphism(c.Q(xi, eta)))
        report.fail("Q(" + std::to_string(xi) + "," + std::to_string(eta) +
                    ") is not an automorphism");
    }
  return report;
}

Cocycle identity_cocycle(const FiniteLoop &base, const AbGroup &kernel) {
  const auto cells = base.order() * base.order();
  std::vector<ModMatrix> id(cells, ModMatrix::identity(kernel));
  return Cocycle(base, kernel, id, id);
}

Cocycle random_cocycle(const FiniteLoop &base, const AbGroup &kernel, std::uint64_t seed) {
  const auto n = base.order();
  std::mt19937_64 seeder(seed);
  std::vector<ModMatrix> p, q;
  p.reserve(n * n);
  q.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    p.push_back(random_automorphism(kernel, seeder()));
    q.push_back(random_automorphism(kernel, seeder()));
  }
  const auto id = ModMatrix::identity(kernel);
  for (std::size_t x = 0; x < n; ++x) {
    p[x * n] = id;
    q[x] = id;
  }
  return Cocycle(base, kernel, std::move(p), std::move(q));
}

Cocycle opposite_cocycle(const Cocycle &c) {
  const auto n = c.order();
  std::vector<ModMatrix> p, q;
  p.reserve(n * n);
  q.reserve(n * n);
  for (Element xi = 0; xi < n; ++xi)
    for (Element eta = 0; eta < n; ++eta) {
      p.push_back(c.Q(eta, xi));
      q.push_back(c.P(eta, xi));
    }
  return Cocycle(c.base().opposite(), c.kernel(), std::move(p), std::move(q));
}

ExtElement ext_mul(const Cocycle &c, const ExtElement &a, const ExtElement &b) {
  const auto &A = c.kernel();
  return {c.base().mul(a.base, b.base),
          add(A, apply(c.P(a.base, b.base), a.fiber), apply(c.Q(a.base, b.base), b.fiber))};
}

ExtElement ext_ldiv(const Cocycle &c, const ExtElement &a, const ExtElement &b) {
  const auto &A = c.kernel();
  const Element z = c.base().ldiv(a.base, b.base);
  auto rhs = sub(A, b.fiber, apply(c.P(a.base, z), a.fiber));
  return {z, apply(invert(c.Q(a.base, z)), rhs)};
}

ExtElement ext_rdiv(const Cocycle &c, const ExtElement &b, const ExtElement &a) {
  const auto &A = c.kernel();
  const Element z = c.base().rdiv(b.base, a.base);
  auto rhs = sub(A, b.fiber, apply(c.Q(z, a.base), a.fiber));
  return {z, apply(invert(c.P(z, a.base)), rhs)};
}

Element ext_index(const Cocycle &c, const ExtElement &a) {
  return Element(a.base * c.kernel().order() + vec_rank(c.kernel(), a.fiber));
}

ExtElement ext_element(const Cocycle &c, Element index) {
  const auto m = c.kernel().order();
  return {Element(index / m), vec_unrank(c.kernel(), index % m)};
}

FiniteLoop build_extension(const Cocycle &c, std::size_t cap) {
  if (!c.kernel().is_finite())
    throw DomainError("cannot materialize an extension by an infinite kernel");
  const auto m = c.kernel().order();
  const auto total = c.order() * m;
  if (total > cap)
    throw ResourceError("extension of order " + std::to_string(total) + " exceeds cap " +
                        std::to_string(cap));
  std::vector<ExtElement> elems;
  elems.reserve(total);
  for (Element i = 0; i < total; ++i)
    elems.push_back(ext_element(c, i));
  std::vector<Element> entries(total * total);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      entries[i * total + j] = ext_index(c, ext_mul(c, elems[i], elems[j]));
  return FiniteLoop(CayleyTable(total, std::move(entries)));
}

// --- homomorphisms ----------------------------------------------------------

const ModMatrix &PhiHom::operator()(const Perm &p) const {
  auto idx = domain_.index_of(p);
  if (!idx)
    throw ConsistencyError("permutation [" + p.to_string() + "] is not in the domain of Phi");
  return images_[*idx];
}

PhiHom phi_from_generators(const PermGroup &inn, const AbGroup &kernel,
                           const std::vector<std::pair<Perm, ModMatrix>> &assignments) {
  for (const auto &[perm, mat] : assignments) {
    if (!inn.contains(perm))
      throw StructuralError("generator [" + perm.to_string() + "] is not in the domain group");
    if (!(mat.group() == kernel))
      throw StructuralError("generator image is over " + mat.group().to_string() +
                            ", expected " + kernel.to_string());
    if (!is_automorphism(mat))
      throw AutomorphismError("generator [" + perm.to_string() + "] is mapped to the " +
                              "non-invertible matrix [" + mat.to_string() + "]");
  }

  std::vector<std::optional<ModMatrix>> images(inn.size());
  std::deque<std::size_t> frontier;
  const auto id = Perm::identity(inn.degree());
  const auto id_idx = *inn.index_of(id);
  images[id_idx] = ModMatrix::identity(kernel);
  frontier.push_back(id_idx);
  std::size_t reached = 1;

  // Every edge g -> s∘g must satisfy Φ(s∘g) = Φ(s)Φ(g). Checking all edges
  // of the Cayley graph proves multiplicativity on the whole closure.
  while (!frontier.empty()) {
    const auto gi = frontier.front();
    frontier.pop_front();
    const Perm &g = inn.elements()[gi];
    for (const auto &[s, s_img] : assignments) {
      const Perm h = compose(s, g);
      const auto hi = *inn.index_of(h);
      ModMatrix h_img = compose(s_img, *images[gi]);
      if (!images[hi]) {
        images[hi] = std::move(h_img);
        frontier.push_back(hi);
        ++reached;
      } else if (!(*images[hi] == h_img)) {
        throw HomomorphismError("assignment is not a homomorphism: [" + s.to_string() +
                                    "] composed with [" + g.to_string() + "] maps to [" +
                                    h_img.to_string() + "] but [" + h.to_string() +
                                    "] already has image [" + images[hi]->to_string() + "]",
                                s, g);
      }
    }
  }
  if (reached != inn.size())
    throw DomainError("generators reach only " + std::to_string(reached) + " of " +
                      std::to_string(inn.size()) + " domain elements (coverage error)");

  std::vector<ModMatrix> dense;
  dense.reserve(images.size());
  for (auto &m : images)
    dense.push_back(std::move(*m));

  PhiHom phi(inn, kernel, std::move(dense));

  // Direct pairwise check where it is cheap; the edge check above already
  // implies it.
  if (inn.size() <= 512) {
    for (std::size_t i = 0; i < inn.size(); ++i)
      for (std::size_t j = 0; j < inn.size(); ++j) {
        const auto &p = inn.elements()[i];
        const auto &q = inn.elements()[j];
        if (!(phi(compose(p, q)) == compose(phi.images()[i], phi.images()[j])))
          throw HomomorphismError("Phi(p q) != Phi(p) Phi(q) for p = [" + p.to_string() +
                                      "], q = [" + q.to_string() + "]",
                                  p, q);
      }
  }
  return phi;
}

Cocycle tangent_like_cocycle(const FiniteLoop &loop, const PhiHom &phi) {
  const auto n = loop.order();
  if (phi.domain().degree() != n)
    throw StructuralError("Phi domain has degree " + std::to_string(phi.domain().degree()) +
                          ", loop has order " + std::to_string(n));
  std::vector<ModMatrix> p, q;
  p.reserve(n * n);
  q.reserve(n * n);
  for (Element xi = 0; xi < n; ++xi)
    for (Element eta = 0; eta < n; ++eta) {
      p.push_back(phi(inner_map_P(loop, xi, eta)));
      q.push_back(phi(inner_map_Q(loop, xi, eta)));
    }
  return Cocycle(loop, phi.kernel(), std::move(p), std::move(q));
}

} // namespace loopkit
