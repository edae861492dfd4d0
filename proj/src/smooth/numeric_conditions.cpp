#include "loopkit/smooth/numeric_conditions.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit::smooth {

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index) {
  const auto idx = std::uint64_t(index);
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(idx),
                    std::uint32_t(idx >> 32)};
  return std::mt19937_64(seq);
}

std::vector<Vec> sample_tuple(const SmoothLoop &loop, std::mt19937_64 &rng,
                              std::size_t retry_cap) {
  std::vector<Vec> out;
  for (int k = 0; k < 3; ++k) {
    std::size_t tries = 0;
    Vec v = loop.sample(rng);
    while (!loop.in_domain(v)) {
      if (++tries > retry_cap)
        throw NumericError("could not draw a domain point of " + loop.name() + " within " +
                           std::to_string(retry_cap) + " retries");
      v = loop.sample(rng);
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

Vec random_fiber(std::size_t n, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v[i] = u(rng);
  return v;
}

double inverse_gap(const SmoothLoop &loop, const Vec &x) {
  const Vec e = loop.identity();
  return (loop.rdiv(e, x) - loop.ldiv(x, e)).norm();
}

/// Evaluates at the tuple, redrawing it while evaluation leaves the domain.
template <class F>
auto with_retry(const SmoothLoop &loop, std::mt19937_64 &rng, std::size_t retry_cap,
                std::vector<Vec> tuple, F &&eval) {
  for (std::size_t attempt = 0;; ++attempt) {
    try {
      auto value = eval(tuple);
      return std::make_pair(std::move(tuple), value);
    } catch (const DomainError &) {
      if (attempt >= retry_cap)
        throw;
      tuple = sample_tuple(loop, rng, retry_cap);
    }
  }
}

std::string format_point(const Vec &v) {
  std::ostringstream s;
  s.precision(6);
  s << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i)
    s << (i ? "," : "") << v[i];
  s << ')';
  return s.str();
}

} // namespace

std::pair<Mat, Mat> condition_ii_sides(const SmoothLoop &loop, PropertyKind p,
                                       const std::vector<Vec> &tuple, double inverse_tol) {
  for (const auto &v : tuple)
    require_domain(loop, v, "sample point");
  const Vec &x = tuple[0], &y = tuple[1], &z = tuple[2];
  auto mul = [&](const Vec &a, const Vec &b) {
    Vec r = loop.mul(a, b);
    require_domain(loop, r, "product");
    return r;
  };
  auto inverse = [&](const Vec &a) {
    if (inverse_gap(loop, a) > inverse_tol)
      throw DomainError("point " + format_point(a) + " has no two-sided inverse");
    return loop.ldiv(a, loop.identity());
  };
  auto L = [&](const Vec &a) { return left_map(loop, a); };
  auto R = [&](const Vec &a) { return right_map(loop, a); };
  auto Ri = [&](const Vec &a) { return right_inv_map(loop, a); };
  auto J = [](std::vector<DualMap> maps, const Vec &at) {
    return jacobian_at(chain(std::move(maps)), at);
  };

  switch (p) {
  case PropertyKind::TwoSidedInverse: {
    const Vec i = inverse(x);
    return {J({R(i)}, x), J({L(x), Ri(x), L(i)}, x)};
  }
  case PropertyKind::LeftInverse: {
    const Vec i = inverse(x), xy = mul(x, y);
    return {J({L(x), R(xy)}, i), J({R(y), L(x), R(x)}, i)};
  }
  case PropertyKind::RightInverse: {
    const Vec j = inverse(y), xy = mul(x, y);
    return {J({R(y), L(xy)}, j), J({L(x), R(y), L(y)}, j)};
  }
  case PropertyKind::Monoassociative: {
    const Vec s = mul(x, x);
    return {J({R(s)}, x) + J({L(x), R(x)}, x) + J({L(x), L(x)}, x),
            J({R(x), R(x)}, x) + J({R(x), L(x)}, x) + J({L(s)}, x)};
  }
  case PropertyKind::LeftAlternative: {
    const Vec xy = mul(x, y);
    return {J({R(xy)}, x) + J({L(x), R(y)}, x), J({R(y), R(x)}, x) + J({R(y), L(x)}, x)};
  }
  case PropertyKind::RightAlternative: {
    const Vec yx = mul(y, x);
    return {J({R(x), L(y)}, x) + J({L(yx)}, x), J({L(y), R(x)}, x) + J({L(y), L(x)}, x)};
  }
  case PropertyKind::Flexible: {
    const Vec yx = mul(y, x), xy = mul(x, y);
    return {J({R(yx)}, x) + J({L(x), L(y)}, x), J({R(x), R(y)}, x) + J({L(xy)}, x)};
  }
  case PropertyKind::LeftBol: {
    const Vec u = mul(y, mul(x, z)), yx = mul(y, x);
    return {J({R(u)}, x) + J({L(x), L(y), R(z)}, x),
            J({R(z), R(yx)}, x) + J({R(z), L(x), L(y)}, x)};
  }
  case PropertyKind::RightBol: {
    const Vec xy = mul(x, y), zxy = mul(mul(z, x), y);
    return {J({L(z), R(x), R(y)}, x) + J({L(z), L(xy)}, x),
            J({R(x), R(y), L(z)}, x) + J({L(zxy)}, x)};
  }
  }
  throw StructuralError("unknown property");
}

NumericReport check_condition_ii(const SmoothLoop &loop, PropertyKind p,
                                 const NumericOptions &opts) {
  NumericReport r;
  r.property = p;
  for (std::size_t i = 0; i < opts.samples; ++i) {
    auto rng = sample_rng(opts.seed, i);
    const auto tuple = sample_tuple(loop, rng, opts.retry_cap);
    if (needs_inverses(p)) {
      const Vec &v = p == PropertyKind::RightInverse ? tuple[1] : tuple[0];
      const double gap = inverse_gap(loop, v);
      if (gap > opts.tol) {
        r.verdict = Verdict::NotApplicable;
        r.samples = i + 1;
        r.witness_index = i;
        r.witness = {v};
        std::ostringstream s;
        s << "left and right inverses of " << format_point(v) << " differ by " << gap;
        r.detail = s.str();
        return r;
      }
    }
    auto [used, residual] = with_retry(loop, rng, opts.retry_cap, tuple, [&](const auto &t) {
      auto [lhs, rhs] = condition_ii_sides(loop, p, t, opts.tol);
      return operator_norm(lhs - rhs);
    });
    if (i == 0 || residual > r.max_residual) {
      r.max_residual = residual;
      r.witness_index = i;
      r.witness = used;
    }
    r.samples = i + 1;
  }
  r.verdict = r.max_residual <= opts.tol ? Verdict::Holds : Verdict::Fails;
  if (!r.holds()) {
    std::ostringstream s;
    s << "largest residual at sample " << r.witness_index << ':';
    for (const auto &v : r.witness)
      s << ' ' << format_point(v);
    r.detail = s.str();
  }
  return r;
}

// --- property identities ----------------------------------------------------

namespace {

struct LoopOps {
  const SmoothLoop &loop;
  Vec e() const { return loop.identity(); }
  Vec mul(const Vec &a, const Vec &b) const { return loop.mul(a, b); }
  Vec ldiv(const Vec &a, const Vec &b) const { return loop.ldiv(a, b); }
  Vec rdiv(const Vec &b, const Vec &a) const { return loop.rdiv(b, a); }
  static double dist(const Vec &a, const Vec &b) { return (a - b).norm(); }
};

struct ProlongOps {
  const SmoothLoop &loop;
  double cond_limit;
  ProlongedElement e() const { return prolong_identity(loop); }
  ProlongedElement mul(const ProlongedElement &a, const ProlongedElement &b) const {
    return prolong_mul(loop, a, b);
  }
  ProlongedElement ldiv(const ProlongedElement &a, const ProlongedElement &b) const {
    return prolong_ldiv(loop, a, b, cond_limit);
  }
  ProlongedElement rdiv(const ProlongedElement &b, const ProlongedElement &a) const {
    return prolong_rdiv(loop, b, a, cond_limit);
  }
  static double dist(const ProlongedElement &a, const ProlongedElement &b) {
    return distance(a, b);
  }
};

template <class Ops, class T>
double identity_residual(const Ops &o, PropertyKind p, const T &x, const T &y, const T &z) {
  auto m = [&](const T &a, const T &b) { return o.mul(a, b); };
  auto gap = [&](const T &a) { return Ops::dist(o.rdiv(o.e(), a), o.ldiv(a, o.e())); };
  switch (p) {
  case PropertyKind::TwoSidedInverse:
    return gap(x);
  case PropertyKind::LeftInverse:
    return std::max(gap(x), Ops::dist(m(o.rdiv(o.e(), x), m(x, y)), y));
  case PropertyKind::RightInverse:
    return std::max(gap(x), Ops::dist(m(m(y, x), o.ldiv(x, o.e())), y));
  case PropertyKind::Monoassociative: {
    const T s = m(x, x);
    return Ops::dist(m(x, s), m(s, x));
  }
  case PropertyKind::LeftAlternative:
    return Ops::dist(m(x, m(x, y)), m(m(x, x), y));
  case PropertyKind::RightAlternative:
    return Ops::dist(m(m(y, x), x), m(y, m(x, x)));
  case PropertyKind::Flexible:
    return Ops::dist(m(x, m(y, x)), m(m(x, y), x));
  case PropertyKind::LeftBol:
    return Ops::dist(m(m(x, m(y, x)), z), m(x, m(y, m(x, z))));
  case PropertyKind::RightBol:
    return Ops::dist(m(z, m(m(x, y), x)), m(m(m(z, x), y), x));
  }
  throw StructuralError("unknown property");
}

} // namespace

double property_residual(const SmoothLoop &loop, PropertyKind p, const std::vector<Vec> &tuple) {
  return identity_residual(LoopOps{loop}, p, tuple[0], tuple[1], tuple[2]);
}

double prolonged_property_residual(const SmoothLoop &loop, PropertyKind p,
                                   const std::vector<ProlongedElement> &tuple,
                                   double cond_limit) {
  return identity_residual(ProlongOps{loop, cond_limit}, p, tuple[0], tuple[1], tuple[2]);
}

// --- derivative formulas ----------------------------------------------------

namespace {

struct CurveSample {
  Vec xi, eta, velocity;
};

CurveSample curve_sample(const SmoothLoop &loop, const NumericOptions &opts, std::size_t i) {
  auto rng = sample_rng(opts.seed, i);
  auto t = sample_tuple(loop, rng, opts.retry_cap);
  return {t[0], t[1], random_fiber(loop.dim(), rng)};
}

DualPoint curve(const Vec &base, const Vec &velocity) {
  DualPoint p = to_dual(base);
  for (std::size_t k = 0; k < p.size(); ++k)
    p[k].d = velocity[Eigen::Index(k)];
  return p;
}

/// Derivative at t = 0 of the left inverse e/ξ(t) along ξ + tv.
Vec left_inverse_velocity(const SmoothLoop &loop, const Vec &xi, const Vec &v) {
  return derivatives(loop.rdiv(to_dual(loop.identity()), curve(xi, v)));
}

/// Derivative at t = 0 of the right inverse ξ(t)\e along ξ + tv.
Vec right_inverse_velocity(const SmoothLoop &loop, const Vec &xi, const Vec &v) {
  return derivatives(loop.ldiv(curve(xi, v), to_dual(loop.identity())));
}

template <class F>
FormulaCheck run_formula(std::string name, const SmoothLoop &loop, const NumericOptions &opts,
                         F &&residual) {
  FormulaCheck f;
  f.name = std::move(name);
  for (std::size_t i = 0; i < opts.samples; ++i) {
    const double r = residual(curve_sample(loop, opts, i));
    if (i == 0 || r > f.max_residual) {
      f.max_residual = r;
      f.witness_index = i;
    }
  }
  return f;
}

} // namespace

FormulaCheck check_inverse_derivative(const SmoothLoop &loop, const NumericOptions &opts) {
  return run_formula("derinv", loop, opts, [&](const CurveSample &s) {
    const Vec inv = loop.rdiv(loop.identity(), s.xi);
    const Mat J =
        jacobian_at(chain({right_inv_map(loop, s.xi), left_map(loop, inv)}), s.xi);
    return (left_inverse_velocity(loop, s.xi, s.velocity) + J * s.velocity).norm();
  });
}

FormulaCheck check_right_inverse_derivative(const SmoothLoop &loop, const NumericOptions &opts) {
  return run_formula("derinv1", loop, opts, [&](const CurveSample &s) {
    const Vec inv = loop.ldiv(s.xi, loop.identity());
    const Mat J =
        jacobian_at(chain({left_inv_map(loop, s.xi), right_map(loop, inv)}), s.xi);
    return (right_inverse_velocity(loop, s.xi, s.velocity) + J * s.velocity).norm();
  });
}

namespace {

// Under the left inverse property: d ρ_{ξη}(ξ̇⁻¹) + d_ξ(λ_ξ⁻¹ ρ_η)(ξ̇) = 0.
FormulaCheck check_left_inverse_formula(const SmoothLoop &loop, const NumericOptions &opts) {
  return run_formula("derleftinv", loop, opts, [&](const CurveSample &s) {
    const Vec inv = loop.ldiv(s.xi, loop.identity());
    const Vec xe = loop.mul(s.xi, s.eta);
    const Vec dinv = left_inverse_velocity(loop, s.xi, s.velocity);
    const Mat A = jacobian_at(right_map(loop, xe), inv);
    const Mat B = jacobian_at(chain({left_inv_map(loop, s.xi), right_map(loop, s.eta)}), s.xi);
    return (A * dinv + B * s.velocity).norm();
  });
}

// Under the right inverse property: d_ξ(ρ_ξ⁻¹ λ_η)(ξ̇) + d λ_{ηξ}(ξ̇⁻¹) = 0.
FormulaCheck check_right_inverse_formula(const SmoothLoop &loop, const NumericOptions &opts) {
  return run_formula("derrightinv", loop, opts, [&](const CurveSample &s) {
    const Vec inv = loop.ldiv(s.xi, loop.identity());
    const Vec ex = loop.mul(s.eta, s.xi);
    const Vec dinv = right_inverse_velocity(loop, s.xi, s.velocity);
    const Mat A = jacobian_at(chain({right_inv_map(loop, s.xi), left_map(loop, s.eta)}), s.xi);
    const Mat B = jacobian_at(left_map(loop, ex), inv);
    return (A * s.velocity + B * dinv).norm();
  });
}

} // namespace

// --- suite ------------------------------------------------------------------

bool SuiteReport::consistent() const {
  for (const auto &r : rows)
    if (!r.consistent)
      return false;
  for (const auto &f : formulas)
    if (!f.holds(options.tol))
      return false;
  return true;
}

SuiteReport theorem1_suite(const SmoothLoop &loop, const NumericOptions &opts) {
  SuiteReport report;
  report.loop = loop.name();
  report.options = opts;
  const auto n = loop.dim();
  for (auto p : kAllProperties) {
    SuiteRow row;
    row.property = p;
    for (std::size_t i = 0; i < opts.samples; ++i) {
      auto rng = sample_rng(opts.seed, i);
      const auto t = sample_tuple(loop, rng, opts.retry_cap);
      std::vector<ProlongedElement> pt;
      for (const auto &b : t)
        pt.push_back({b, random_fiber(n, rng)});
      const double rl = property_residual(loop, p, t);
      const double rt = prolonged_property_residual(loop, p, pt, opts.cond_limit);
      if (i == 0 || rl > row.res_loop) {
        row.res_loop = rl;
        row.witness_loop = i;
      }
      if (i == 0 || rt > row.res_tangent) {
        row.res_tangent = rt;
        row.witness_tangent = i;
      }
    }
    row.condition = check_condition_ii(loop, p, opts);
    row.holds_loop = row.res_loop <= opts.tol;
    row.holds_tangent = row.res_tangent <= opts.tol;
    row.consistent =
        row.holds_tangent == row.holds_loop && (!row.holds_loop || row.condition.holds());
    report.rows.push_back(std::move(row));
  }

  auto holds_on_loop = [&](PropertyKind p) {
    return report.rows[static_cast<std::size_t>(p)].holds_loop;
  };
  report.formulas.push_back(check_inverse_derivative(loop, opts));
  report.formulas.push_back(check_right_inverse_derivative(loop, opts));
  if (holds_on_loop(PropertyKind::LeftInverse)) {
    report.formulas.push_back(check_left_inverse_formula(loop, opts));
  } else {
    report.formulas.push_back({"derleftinv", false, 0.0, 0});
  }
  if (holds_on_loop(PropertyKind::RightInverse)) {
    report.formulas.push_back(check_right_inverse_formula(loop, opts));
  } else {
    report.formulas.push_back({"derrightinv", false, 0.0, 0});
  }
  return report;
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string condition_cell(const NumericReport &r) {
  return r.verdict == Verdict::NotApplicable ? "n/a" : sci(r.max_residual);
}

} // namespace

std::string format_suite(const SuiteReport &report, bool porcelain) {
  std::ostringstream s;
  const double tol = report.options.tol;
  if (porcelain) {
    for (const auto &r : report.rows) {
      s << "property=" << property_name(r.property) << " resL=" << sci(r.res_loop)
        << " resT=" << sci(r.res_tangent) << " resCond=" << condition_cell(r.condition)
        << " pass=" << (r.consistent ? "true" : "false");
      if (!r.holds_loop || !r.holds_tangent)
        s << " witness=" << (r.holds_loop ? r.witness_tangent : r.witness_loop);
      s << '\n';
    }
    for (const auto &f : report.formulas) {
      s << "formula=" << f.name << " res=" << (f.applicable ? sci(f.max_residual) : "n/a")
        << " pass=" << (f.holds(tol) ? "true" : "false");
      if (f.applicable && !f.holds(tol))
        s << " witness=" << f.witness_index;
      s << '\n';
    }
    return s.str();
  }

  s << "loop " << report.loop << ": samples=" << report.options.samples
    << " seed=" << report.options.seed << " tol=" << sci(tol) << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%-18s %-10s %-10s %-10s %-5s %-5s %-5s %s\n", "property",
                "res(L)", "res(T)", "res(ii)", "L", "T(L)", "(ii)", "verdict");
  s << line;
  for (const auto &r : report.rows) {
    std::string verdict = r.consistent ? "ok" : "VIOLATION";
    if (!r.holds_loop || !r.holds_tangent)
      verdict += " witness=#" + std::to_string(r.holds_loop ? r.witness_tangent : r.witness_loop);
    std::snprintf(line, sizeof line, "%-18s %-10s %-10s %-10s %-5s %-5s %-5s %s\n",
                  std::string(property_name(r.property)).c_str(), sci(r.res_loop).c_str(),
                  sci(r.res_tangent).c_str(), condition_cell(r.condition).c_str(),
                  r.holds_loop ? "yes" : "no", r.holds_tangent ? "yes" : "no",
                  std::string(verdict_name(r.condition.verdict)).c_str(), verdict.c_str());
    s << line;
  }
  for (const auto &f : report.formulas) {
    std::string status = !f.applicable ? "n/a" : f.holds(tol) ? "ok" : "FAILED";
    if (f.applicable && !f.holds(tol))
      status += " witness=#" + std::to_string(f.witness_index);
    std::snprintf(line, sizeof line, "formula %-12s %-10s %s\n", f.name.c_str(),
                  f.applicable ? sci(f.max_residual).c_str() : "-", status.c_str());
    s << line;
  }
  return s.str();
}

} // namespace loopkit::smooth
