#include <doctest.h>

#include <random>

#include "loopkit/conditions.hpp"
#include "loopkit/extensions.hpp"
#include "loopkit/mapping_groups.hpp"
#include "test_support.hpp"

using namespace loopkit;

// Randomized checks over seeded inputs. Each case draws its own stream so
// failures replay from the printed seed.

TEST_CASE("extensions of corpus loops are loops whose checks match the oracle") {
  std::mt19937_64 rng(2024);
  auto loops = testing::corpus();
  auto kernels = testing::corpus_kernels();
  for (int trial = 0; trial < 40; ++trial) {
    const auto &[name, loop] = loops[rng() % loops.size()];
    const auto &a = kernels[rng() % kernels.size()];
    const auto seed = rng();
    CAPTURE(name);
    CAPTURE(seed);
    auto c = random_cocycle(loop, a, seed);
    auto ext = build_extension(c);
    REQUIRE(validate_loop(ext.table()).valid);
    for (auto p : kAllProperties)
      CHECK(has_property(ext, p).holds == testing::naive_has(ext.table(), p));
    CHECK(is_associative(ext).holds == testing::naive_associative(ext.table()));
  }
}

TEST_CASE("projection to the base is a homomorphism") {
  std::mt19937_64 rng(77);
  auto n6 = testing::fixture("n6.tbl");
  AbGroup a(2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = random_cocycle(n6, a, rng());
    auto ext = build_extension(c);
    const auto k = Element(a.order());
    for (Element u = 0; u < ext.order(); ++u)
      for (Element v = 0; v < ext.order(); ++v)
        REQUIRE(ext.mul(u, v) / k == n6.mul(u / k, v / k));
  }
}

TEST_CASE("random T-quasigroups invert exactly") {
  std::mt19937_64 rng(5);
  for (auto spec : {"z7^2", "z4^2", "z2^3", "z9^1"}) {
    auto a = AbGroup::parse(spec);
    for (int trial = 0; trial < 10; ++trial) {
      TQuasigroupParams p{a, random_automorphism(a, rng()), random_automorphism(a, rng()),
                          vec_unrank(a, rng() % a.order())};
      auto t = t_quasigroup(p);
      REQUIRE(validate_quasigroup(t).valid);
      for (int k = 0; k < 50; ++k) {
        auto x = vec_unrank(a, rng() % a.order()), y = vec_unrank(a, rng() % a.order());
        CHECK(t_ldiv(p, x, t_mul(p, x, y)) == y);
        CHECK(t_rdiv(p, t_mul(p, y, x), x) == y);
      }
    }
  }
}

TEST_CASE("matrix composition is associative and inversion is an anti-homomorphism") {
  std::mt19937_64 rng(13);
  for (auto spec : {"z6^2", "z5^3", "z0^2"}) {
    auto a = AbGroup::parse(spec);
    for (int trial = 0; trial < 50; ++trial) {
      auto m = random_automorphism(a, rng()), n = random_automorphism(a, rng()),
           o = random_automorphism(a, rng());
      CHECK(compose(compose(m, n), o) == compose(m, compose(n, o)));
      CHECK(invert(compose(m, n)) == compose(invert(n), invert(m)));
    }
  }
}

TEST_CASE("opposite cocycle is an involution") {
  std::mt19937_64 rng(3);
  for (const auto &[name, loop] : testing::corpus()) {
    auto c = random_cocycle(loop, AbGroup(3, 1), rng());
    CHECK(opposite_cocycle(opposite_cocycle(c)) == c);
    CHECK(validate_cocycle(opposite_cocycle(c)).valid);
  }
}

TEST_CASE("inner maps lie in the inner mapping group of random extensions") {
  std::mt19937_64 rng(8);
  auto n5 = testing::fixture("n5.tbl");
  auto ext = build_extension(random_cocycle(n5, AbGroup(2, 1), rng()));
  auto inn = inner_mapping_group(ext);
  CHECK(multiplication_group(ext).size() == ext.order() * inn.size());
  for (int k = 0; k < 30; ++k) {
    const auto x = Element(rng() % ext.order()), y = Element(rng() % ext.order());
    CHECK(inn.contains(inner_map_P(ext, x, y)));
    CHECK(inn.contains(inner_map_Q(ext, x, y)));
  }
}
