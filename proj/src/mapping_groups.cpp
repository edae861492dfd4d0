#include "loopkit/mapping_groups.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit {

// --- Perm -------------------------------------------------------------------

Perm::Perm(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size());
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw StructuralError("image array is not a permutation: " + to_string());
    seen[v] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Element> img(degree);
  for (std::size_t i = 0; i < degree; ++i)
    img[i] = Element(i);
  return Perm(std::move(img), Unchecked{});
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::string Perm::to_string() const {
  std::ostringstream s;
  for (std::size_t i = 0; i < images_.size(); ++i)
    s << (i ? " " : "") << images_[i];
  return s.str();
}

Perm compose(const Perm &p, const Perm &q) {
  if (p.degree() != q.degree())
    throw StructuralError("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()) + ")");
  std::vector<Element> img(q.degree());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = p.images_[q.images_[i]];
  return Perm(std::move(img), Perm::Unchecked{});
}

Perm invert(const Perm &p) {
  std::vector<Element> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[p.images_[i]] = Element(i);
  return Perm(std::move(img), Perm::Unchecked{});
}

int parity(const Perm &p) {
  std::vector<char> seen(p.degree());
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p(Element(j))) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return int(transpositions % 2);
}

// --- PermGroup --------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> sorted_elements,
                     std::vector<Generator> gens)
    : degree_(degree), elements_(std::move(sorted_elements)), generators_(std::move(gens)) {
  if (!std::is_sorted(elements_.begin(), elements_.end()))
    std::sort(elements_.begin(), elements_.end());
}

std::optional<std::size_t> PermGroup::index_of(const Perm &p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    return std::nullopt;
  return std::size_t(it - elements_.begin());
}

PermGroup generate_group(std::size_t degree, std::vector<PermGroup::Generator> generators,
                         std::size_t cap) {
  for (const auto &g : generators)
    if (g.perm.degree() != degree)
      throw StructuralError("generator '" + g.label + "' has wrong degree");

  std::set<Perm> found;
  std::deque<Perm> frontier;
  auto e = Perm::identity(degree);
  found.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    Perm g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto &s : generators) {
      Perm h = compose(s.perm, g);
      if (found.insert(h).second) {
        if (found.size() > cap)
          throw ResourceError("group closure exceeded cap of " + std::to_string(cap) +
                              " elements");
        frontier.push_back(std::move(h));
      }
    }
  }
  return PermGroup(degree, std::vector<Perm>(found.begin(), found.end()), std::move(generators));
}

PermGroup multiplication_group(const FiniteLoop &loop, std::size_t cap) {
  std::vector<PermGroup::Generator> gens;
  for (Element x = 0; x < loop.order(); ++x)
    gens.push_back({loop.left_translation(x), "L" + std::to_string(x)});
  for (Element x = 0; x < loop.order(); ++x)
    gens.push_back({loop.right_translation(x), "R" + std::to_string(x)});
  return generate_group(loop.order(), std::move(gens), cap);
}

PermGroup stabilizer(const PermGroup &group, Element point) {
  std::vector<Perm> stab;
  for (const auto &p : group.elements())
    if (p.fixes(point))
      stab.push_back(p);

  // Greedy generating set: walk the sorted elements and keep each one that
  // lies outside the subgroup generated so far.
  std::vector<PermGroup::Generator> gens;
  std::set<Perm> span{Perm::identity(group.degree())};
  for (const auto &p : stab) {
    if (span.count(p))
      continue;
    gens.push_back({p, "g" + std::to_string(gens.size())});
    auto sub = generate_group(group.degree(), gens, stab.size());
    span = std::set<Perm>(sub.elements().begin(), sub.elements().end());
    if (span.size() == stab.size())
      break;
  }
  return PermGroup(group.degree(), std::move(stab), std::move(gens));
}

PermGroup inner_mapping_group(const FiniteLoop &loop, std::size_t cap) {
  auto inn = stabilizer(multiplication_group(loop, cap), 0);
  return inn;
}

namespace {

Perm left_inverse_translation(const FiniteLoop &loop, Element x) {
  return invert(loop.left_translation(x));
}

Perm require_inner(Perm p, const char *which, Element xi, Element eta) {
  if (!p.fixes(0))
    throw ConsistencyError(std::string(which) + "(" + std::to_string(xi) + "," +
                           std::to_string(eta) + ") does not fix the identity");
  return p;
}

} // namespace

Perm inner_map_P(const FiniteLoop &loop, Element xi, Element eta) {
  const Element prod = loop.mul(xi, eta);
  Perm p = compose(left_inverse_translation(loop, prod),
                   compose(loop.right_translation(eta), loop.left_translation(xi)));
  return require_inner(std::move(p), "inner_map_P", xi, eta);
}

Perm inner_map_Q(const FiniteLoop &loop, Element xi, Element eta) {
  const Element prod = loop.mul(xi, eta);
  Perm q = compose(left_inverse_translation(loop, prod),
                   compose(loop.left_translation(xi), loop.left_translation(eta)));
  return require_inner(std::move(q), "inner_map_Q", xi, eta);
}

} // namespace loopkit
