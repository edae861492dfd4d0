#include "loopkit/smooth/smooth_loop.hpp"

#include <cmath>
#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit::smooth {

DualPoint to_dual(const Vec &x) {
  DualPoint out(std::size_t(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i)
    out[std::size_t(i)] = Dual(x[i]);
  return out;
}

Vec values(const DualPoint &x) {
  Vec out(Eigen::Index(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    out[Eigen::Index(i)] = x[i].v;
  return out;
}

Vec derivatives(const DualPoint &x) {
  Vec out(Eigen::Index(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    out[Eigen::Index(i)] = x[i].d;
  return out;
}

DualMap left_map(const SmoothLoop &loop, const Vec &a) {
  return [&loop, c = to_dual(a)](const DualPoint &p) { return loop.mul(c, p); };
}

DualMap right_map(const SmoothLoop &loop, const Vec &a) {
  return [&loop, c = to_dual(a)](const DualPoint &p) { return loop.mul(p, c); };
}

DualMap left_inv_map(const SmoothLoop &loop, const Vec &a) {
  return [&loop, c = to_dual(a)](const DualPoint &p) { return loop.ldiv(c, p); };
}

DualMap right_inv_map(const SmoothLoop &loop, const Vec &a) {
  return [&loop, c = to_dual(a)](const DualPoint &p) { return loop.rdiv(p, c); };
}

DualMap chain(std::vector<DualMap> maps) {
  return [maps = std::move(maps)](const DualPoint &p) {
    DualPoint q = p;
    for (auto it = maps.rbegin(); it != maps.rend(); ++it)
      q = (*it)(q);
    return q;
  };
}

Mat jacobian_at(const DualMap &f, const Vec &p) {
  const auto n = p.size();
  Mat J(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    DualPoint seeded = to_dual(p);
    seeded[std::size_t(j)].d = 1.0;
    const DualPoint out = f(seeded);
    if (Eigen::Index(out.size()) != n)
      throw StructuralError("map changes dimension");
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = out[std::size_t(i)].d;
      if (!std::isfinite(d)) {
        std::ostringstream s;
        s << "non-finite derivative at coordinate " << j << " of point [" << p.transpose() << "]";
        throw NumericError(s.str());
      }
      J(i, j) = d;
    }
  }
  return J;
}

Mat finite_difference_jacobian(const DualMap &f, const Vec &p, double h) {
  const auto n = p.size();
  Mat J(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Vec plus = p, minus = p;
    plus[j] += h;
    minus[j] -= h;
    J.col(j) = (values(f(to_dual(plus))) - values(f(to_dual(minus)))) / (2.0 * h);
  }
  return J;
}

void require_domain(const SmoothLoop &loop, const Vec &x, const char *what) {
  if (Eigen::Index(loop.dim()) != x.size() || !loop.in_domain(x)) {
    std::ostringstream s;
    s << what << " [" << x.transpose() << "] is outside the domain of " << loop.name();
    throw DomainError(s.str());
  }
}

Mat cocycle_P(const SmoothLoop &loop, const Vec &xi, const Vec &eta) {
  require_domain(loop, xi, "xi");
  require_domain(loop, eta, "eta");
  const Vec prod = loop.mul(xi, eta);
  require_domain(loop, prod, "xi*eta");
  return jacobian_at(
      chain({left_inv_map(loop, prod), right_map(loop, eta), left_map(loop, xi)}),
      loop.identity());
}

Mat cocycle_Q(const SmoothLoop &loop, const Vec &xi, const Vec &eta) {
  require_domain(loop, xi, "xi");
  require_domain(loop, eta, "eta");
  const Vec prod = loop.mul(xi, eta);
  require_domain(loop, prod, "xi*eta");
  return jacobian_at(chain({left_inv_map(loop, prod), left_map(loop, xi), left_map(loop, eta)}),
                     loop.identity());
}

double operator_norm(const Mat &m) {
  if (m.size() == 0)
    return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

} // namespace loopkit::smooth
