#include <doctest.h>

#include <set>

#include "loopkit/errors.hpp"
#include "loopkit/mapping_groups.hpp"
#include "test_support.hpp"

using namespace loopkit;

namespace {

// Closure of a generating set by repeated pairwise products, done the slow way.
std::set<std::vector<Element>> naive_closure(const std::vector<Perm> &gens, std::size_t n) {
  std::set<std::vector<Element>> found;
  std::vector<Element> id(n);
  for (std::size_t i = 0; i < n; ++i)
    id[i] = Element(i);
  found.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = found;
    for (const auto &a : snapshot)
      for (const auto &g : gens) {
        std::vector<Element> c(n);
        for (std::size_t i = 0; i < n; ++i)
          c[i] = g(a[i]);
        grew = found.insert(c).second || grew;
      }
  }
  return found;
}

std::set<std::vector<Element>> naive_mlt(const FiniteLoop &loop) {
  std::vector<Perm> gens;
  for (Element x = 0; x < loop.order(); ++x) {
    gens.push_back(loop.left_translation(x));
    gens.push_back(loop.right_translation(x));
  }
  return naive_closure(gens, loop.order());
}

} // namespace

TEST_CASE("composition applies the right factor first") {
  Perm p({1, 2, 0}), q({1, 0, 2});
  auto pq = compose(p, q);
  for (Element x = 0; x < 3; ++x)
    CHECK(pq(x) == p(q(x)));
  CHECK(pq == Perm({2, 1, 0}));
  CHECK(compose(p, invert(p)).is_identity());
  CHECK(parity(p) == 0);
  CHECK(parity(q) == 1);
}

TEST_CASE("permutation construction is checked") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), StructuralError);
  CHECK_THROWS_AS(Perm({0, 3, 1}), StructuralError);
  CHECK(Perm({2, 0, 1}).to_string() == "2 0 1");
}

TEST_CASE("two 3-cycles generate a cyclic group of order 3") {
  auto g = generate_group(3, {{Perm({1, 2, 0}), "a"}, {Perm({2, 0, 1}), "b"}});
  CHECK(g.size() == 3);
  auto s3 = generate_group(3, {{Perm({1, 2, 0}), "a"}, {Perm({1, 0, 2}), "t"}});
  CHECK(s3.size() == 6);
  CHECK(s3.contains(Perm({0, 2, 1})));
}

TEST_CASE("multiplication group of Z4 is Z4") {
  FiniteLoop z4(testing::cyclic_table(4));
  CHECK(multiplication_group(z4).size() == 4);
  CHECK(inner_mapping_group(z4).size() == 1);
}

TEST_CASE("multiplication group of S3 has order 36") {
  auto s3 = testing::fixture("s3.tbl");
  auto mlt = multiplication_group(s3);
  CHECK(mlt.size() == 36);
  CHECK(naive_mlt(s3).size() == 36);
  std::set<std::vector<Element>> ours;
  for (const auto &p : mlt.elements())
    ours.insert(p.images());
  CHECK(ours == naive_mlt(s3));
  CHECK(inner_mapping_group(s3).size() == 6);
}

TEST_CASE("Mlt acts transitively, so |Mlt| = n |Inn|") {
  for (const auto &[name, loop] : testing::corpus()) {
    CAPTURE(name);
    auto mlt = multiplication_group(loop);
    auto inn = inner_mapping_group(loop);
    CHECK(mlt.size() == loop.order() * inn.size());
    CHECK(mlt.size() == naive_mlt(loop).size());
    for (const auto &p : inn.elements())
      CHECK(p.fixes(0));
    // greedy generators really generate
    std::vector<Perm> gens;
    for (const auto &g : inn.generators())
      gens.push_back(g.perm);
    CHECK(naive_closure(gens, loop.order()).size() == inn.size());
  }
}

TEST_CASE("inner maps of a group") {
  auto s3 = testing::fixture("s3.tbl");
  for (Element xi = 0; xi < 6; ++xi)
    for (Element eta = 0; eta < 6; ++eta) {
      auto p = inner_map_P(s3, xi, eta);
      auto q = inner_map_Q(s3, xi, eta);
      CHECK(q.is_identity());
      const Element inv = s3.left_inverse(eta);
      for (Element x = 0; x < 6; ++x)
        CHECK(p(x) == s3.mul(s3.mul(inv, x), eta));
    }
}

TEST_CASE("inner maps of a nonassociative loop") {
  auto n5 = testing::fixture("n5.tbl");
  auto q = inner_map_Q(n5, 1, 2);
  CHECK_FALSE(q.is_identity());
  CHECK(q.fixes(0));
  auto inn = inner_mapping_group(n5);
  for (Element xi = 0; xi < 5; ++xi)
    for (Element eta = 0; eta < 5; ++eta) {
      auto p = inner_map_P(n5, xi, eta);
      CHECK(inn.contains(p));
      CHECK(inn.contains(inner_map_Q(n5, xi, eta)));
      // λ_{ξη} P(ξ,η) = ρ_η λ_ξ
      for (Element x = 0; x < 5; ++x)
        CHECK(n5.mul(n5.mul(xi, eta), p(x)) == n5.mul(n5.mul(xi, x), eta));
    }
}

TEST_CASE("group closure respects the cap") {
  auto b8 = testing::fixture("b8.tbl");
  CHECK_THROWS_AS(multiplication_group(b8, 10), ResourceError);
}
