#include <doctest.h>

#include <cmath>

#include "loopkit/errors.hpp"
#include "loopkit/smooth/catalog.hpp"
#include "loopkit/smooth/dual.hpp"
#include "loopkit/smooth/numeric_conditions.hpp"
#include "loopkit/smooth/prolongation.hpp"
#include "loopkit/smooth/smooth_loop.hpp"

using namespace loopkit;
using namespace loopkit::smooth;

namespace {

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

// Independent semidirect-product oracle for the affine group: with η = (a, b),
// conjugation p ↦ η⁻¹pη has differential [[1, 0], [b/a, 1/a]] at e.
ProlongedElement affine_semidirect(const ProlongedElement &u, const ProlongedElement &w) {
  const double a1 = u.base(0), b1 = u.base(1), a2 = w.base(0), b2 = w.base(1);
  Mat ad(2, 2);
  ad << 1, 0, b2 / a2, 1 / a2;
  return {v2(a1 * a2, a1 * b2 + b1), ad * u.fiber + w.fiber};
}

} // namespace

TEST_CASE("dual number arithmetic") {
  Dual a{3, 1}, b{2, 5};
  CHECK((a * b).v == 6);
  CHECK((a * b).d == 17);
  CHECK((a + b).d == 6);
  CHECK((a - b).d == -4);
  auto q = a / b; // (3 + δ)/(2 + 5δ) = 1.5 + (1·2 − 3·5)/4 δ
  CHECK(q.v == doctest::Approx(1.5));
  CHECK(q.d == doctest::Approx(-13.0 / 4));
  auto r = sqrt(Dual{4, 1});
  CHECK(r.v == doctest::Approx(2));
  CHECK(r.d == doctest::Approx(0.25));
  CHECK((-a).d == -1);
}

TEST_CASE("Jacobians of simple maps") {
  DualMap id = [](const DualPoint &p) { return p; };
  CHECK(jacobian_at(id, v2(0.3, -2)).isApprox(Mat::Identity(2, 2)));
  DualMap f = [](const DualPoint &p) { return DualPoint{p[0] + p[1], p[0] * p[1]}; };
  Mat expect(2, 2);
  expect << 1, 1, 2, 1;
  CHECK((jacobian_at(f, v2(1, 2)) - expect).norm() == 0.0);
  DualMap bad = [](const DualPoint &p) { return DualPoint{p[0] / (p[1] - p[1]), p[1]}; };
  CHECK_THROWS_AS(jacobian_at(bad, v2(1, 2)), NumericError);
}

TEST_CASE("Jacobians agree with finite differences on catalog translations") {
  for (const auto &name : builtin_names()) {
    CAPTURE(name);
    auto loop = builtin_loop(name);
    double worst = 0;
    for (std::size_t i = 0; i < 50; ++i) {
      auto rng = sample_rng(3, i);
      auto t = sample_tuple(*loop, rng, 64);
      for (const auto &m : {left_map(*loop, t[0]), right_map(*loop, t[0]),
                            left_inv_map(*loop, t[0]), right_inv_map(*loop, t[0])})
        worst = std::max(worst, (jacobian_at(m, t[1]) - finite_difference_jacobian(m, t[1]))
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    CHECK(worst <= 1e-5);
  }
}

TEST_CASE("catalog loops satisfy the loop axioms") {
  for (const auto &name : builtin_names()) {
    CAPTURE(name);
    auto loop = builtin_loop(name);
    const Vec e = loop->identity();
    double worst = 0;
    for (std::size_t i = 0; i < 200; ++i) {
      auto rng = sample_rng(9, i);
      auto t = sample_tuple(*loop, rng, 64);
      const Vec &x = t[0], &y = t[1];
      worst = std::max({worst, (loop->mul(e, y) - y).norm(), (loop->mul(x, e) - x).norm(),
                        (loop->mul(x, loop->ldiv(x, y)) - y).norm(),
                        (loop->mul(loop->rdiv(y, x), x) - y).norm(),
                        (values(loop->mul(to_dual(x), to_dual(y))) - loop->mul(x, y)).norm()});
    }
    CHECK(worst <= 1e-10);
  }
  CHECK_THROWS_AS(builtin_loop("torus"), StructuralError);
}

TEST_CASE("parabolic loop closed forms and nonassociativity") {
  auto loop = builtin_loop("parabolic");
  const Vec x = v2(1, 0);
  CHECK(loop->mul(loop->mul(x, x), x) == v2(3, 3));
  CHECK(loop->mul(x, loop->mul(x, x)) == v2(3, 5));
  const Vec a = v2(0.5, -1), b = v2(2, 0.25);
  const double d = b(0) - a(0);
  CHECK((loop->ldiv(a, b) - v2(d, b(1) - a(1) - a(0) * d * d)).norm() < 1e-15);
  CHECK((loop->rdiv(b, a) - v2(d, b(1) - a(1) - d * a(0) * a(0))).norm() < 1e-15);
}

TEST_CASE("affine group is associative") {
  auto loop = builtin_loop("affine");
  for (std::size_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(4, i);
    auto t = sample_tuple(*loop, rng, 64);
    CHECK((loop->mul(loop->mul(t[0], t[1]), t[2]) - loop->mul(t[0], loop->mul(t[1], t[2])))
              .norm() < 1e-12);
  }
  CHECK_FALSE(loop->in_domain(v2(-1, 0)));
  CHECK_THROWS_AS(require_domain(*loop, v2(0, 1), "test"), DomainError);
}

TEST_CASE("cocycle normalization and the abelian case") {
  for (const auto &name : builtin_names()) {
    CAPTURE(name);
    auto loop = builtin_loop(name);
    const Vec e = loop->identity();
    const auto n = Eigen::Index(loop->dim());
    for (std::size_t i = 0; i < 50; ++i) {
      auto rng = sample_rng(5, i);
      auto t = sample_tuple(*loop, rng, 64);
      CHECK((cocycle_P(*loop, t[0], e) - Mat::Identity(n, n)).norm() <= 1e-9);
      CHECK((cocycle_Q(*loop, e, t[1]) - Mat::Identity(n, n)).norm() <= 1e-9);
    }
  }
  auto add = additive_loop(3);
  auto rng = sample_rng(1, 0);
  auto t = sample_tuple(*add, rng, 64);
  CHECK(cocycle_P(*add, t[0], t[1]).isApprox(Mat::Identity(3, 3)));
  CHECK(cocycle_Q(*add, t[0], t[1]).isApprox(Mat::Identity(3, 3)));
}

TEST_CASE("affine prolongation matches the semidirect product") {
  auto loop = builtin_loop("affine");
  double worst = 0, worst_q = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(11, i);
    auto t = sample_tuple(*loop, rng, 64);
    std::uniform_real_distribution<double> u(-1, 1);
    ProlongedElement a{t[0], v2(u(rng), u(rng))}, b{t[1], v2(u(rng), u(rng))};
    worst = std::max(worst, distance(prolong_mul(*loop, a, b), affine_semidirect(a, b)));
    worst_q = std::max(worst_q, (cocycle_Q(*loop, t[0], t[1]) - Mat::Identity(2, 2)).norm());
  }
  CHECK(worst <= 1e-9);
  CHECK(worst_q <= 1e-9);
}

TEST_CASE("parabolic cocycle is not constant") {
  auto loop = builtin_loop("parabolic");
  auto p1 = cocycle_P(*loop, v2(0.5, 0), v2(1, 0));
  auto p2 = cocycle_P(*loop, v2(-0.5, 0.3), v2(0.2, 1));
  auto q1 = cocycle_Q(*loop, v2(0.5, 0), v2(1, 0));
  CHECK((p1 - p2).norm() > 1e-3);
  CHECK((q1 - Mat::Identity(2, 2)).norm() > 1e-3);
}

TEST_CASE("prolongation restricted to the zero fiber is the loop") {
  auto loop = builtin_loop("parabolic");
  for (std::size_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(6, i);
    auto t = sample_tuple(*loop, rng, 64);
    auto r = prolong_mul(*loop, {t[0], Vec::Zero(2)}, {t[1], Vec::Zero(2)});
    CHECK(r.base == loop->mul(t[0], t[1]));
    CHECK(r.fiber.norm() <= 1e-9);
  }
}

TEST_CASE("prolongation divisions") {
  auto loop = builtin_loop("parabolic");
  auto e = prolong_identity(*loop);
  ProlongedElement b{v2(0.3, -0.2), v2(1, 2)};
  CHECK(distance(prolong_ldiv(*loop, e, b), b) <= 1e-12);
  CHECK(distance(prolong_rdiv(*loop, b, e), b) <= 1e-12);
  double worst = 0;
  for (std::size_t i = 0; i < 300; ++i) {
    auto rng = sample_rng(7, i);
    auto t = sample_tuple(*loop, rng, 64);
    std::uniform_real_distribution<double> u(-1, 1);
    ProlongedElement x{t[0], v2(u(rng), u(rng))}, y{t[1], v2(u(rng), u(rng))};
    worst = std::max(worst, distance(prolong_mul(*loop, x, prolong_ldiv(*loop, x, y)), y));
    worst = std::max(worst, distance(prolong_mul(*loop, prolong_rdiv(*loop, y, x), x), y));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("ill-conditioned solves are refused") {
  Mat singular(2, 2);
  singular << 1, 1, 1, 1;
  CHECK_THROWS_AS(conditioned_solve(singular, v2(1, 0)), NumericError);
  Mat good(2, 2);
  good << 2, 0, 0, 4;
  CHECK((conditioned_solve(good, v2(2, 2)) - v2(1, 0.5)).norm() < 1e-15);
}

TEST_CASE("sampling is a function of seed and index") {
  auto loop = builtin_loop("affine");
  auto r1 = sample_rng(42, 17), r2 = sample_rng(42, 17), r3 = sample_rng(42, 18);
  auto a = sample_tuple(*loop, r1, 64), b = sample_tuple(*loop, r2, 64),
       c = sample_tuple(*loop, r3, 64);
  CHECK(a[0] == b[0]);
  CHECK(a[2] == b[2]);
  CHECK(a[0] != c[0]);
  for (const auto &p : a) {
    CHECK(p(0) >= 0.5);
    CHECK(p(0) <= 2);
  }
}

TEST_CASE("condition (ii) on groups") {
  NumericOptions opts;
  opts.samples = 200;
  auto affine = builtin_loop("affine");
  for (auto p : kAllProperties) {
    auto r = check_condition_ii(*affine, p, opts);
    CAPTURE(property_name(p));
    CHECK(r.holds());
    CHECK(r.max_residual <= 1e-9);
  }
  opts.samples = 1000;
  auto line = additive_loop(1);
  for (auto p : kAllProperties)
    CHECK(check_condition_ii(*line, p, opts).max_residual <= 1e-12);
}

TEST_CASE("condition (ii) on the parabolic loop fails with a witness") {
  NumericOptions opts;
  opts.samples = 200;
  auto loop = builtin_loop("parabolic");
  for (auto p : kAllProperties) {
    CAPTURE(property_name(p));
    auto r = check_condition_ii(*loop, p, opts);
    if (needs_inverses(p)) {
      CHECK(r.verdict == Verdict::NotApplicable);
      continue;
    }
    CHECK(r.verdict == Verdict::Fails);
    CHECK(r.max_residual > 1e-4);
    REQUIRE(r.witness.size() == 3);
    // the reported witness reproduces the residual
    auto sides = condition_ii_sides(*loop, p, r.witness, opts.tol);
    CHECK(operator_norm(sides.first - sides.second) == doctest::Approx(r.max_residual));
  }
}

TEST_CASE("prolongation keeps exactly the properties of the loop") {
  NumericOptions opts;
  opts.samples = 200;
  for (auto name : {"additive", "affine", "parabolic", "commutative", "spd-bol"}) {
    CAPTURE(name);
    auto loop = builtin_loop(name);
    auto rep = theorem1_suite(*loop, opts);
    CHECK(rep.consistent());
    CHECK(rep.rows.size() == 9);
    for (const auto &row : rep.rows) {
      CHECK(row.holds_loop == row.holds_tangent);
      if (std::string(name) == "parabolic")
        CHECK_FALSE(row.holds_loop);
      if (std::string(name) == "affine" || std::string(name) == "additive")
        CHECK(row.holds_loop);
    }
  }
  auto spd = theorem1_suite(*builtin_loop("spd-bol"), opts);
  for (const auto &row : spd.rows)
    if (row.property == PropertyKind::LeftBol)
      CHECK(row.holds_loop);
    else if (row.property == PropertyKind::RightBol)
      CHECK_FALSE(row.holds_loop);
}

TEST_CASE("inverse derivative formulas") {
  NumericOptions opts;
  opts.samples = 100;
  for (auto name : {"affine", "parabolic", "spd-bol"}) {
    CAPTURE(name);
    auto loop = builtin_loop(name);
    CHECK(check_inverse_derivative(*loop, opts).max_residual <= 1e-9);
    CHECK(check_right_inverse_derivative(*loop, opts).max_residual <= 1e-9);
  }
}

TEST_CASE("suite formatting") {
  NumericOptions opts;
  opts.samples = 20;
  auto rep = theorem1_suite(*builtin_loop("parabolic"), opts);
  auto porcelain = format_suite(rep, true);
  CHECK(porcelain.find("property=left-bol resL=") != std::string::npos);
  CHECK(porcelain.find("resCond=n/a") != std::string::npos);
  CHECK(porcelain.find("formula=derinv ") != std::string::npos);
  CHECK(format_suite(rep, true) == format_suite(theorem1_suite(*builtin_loop("parabolic"), opts), true));
  CHECK(format_suite(rep, false).find("left-bol") != std::string::npos);
}
