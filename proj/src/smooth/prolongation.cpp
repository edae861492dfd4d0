#include "loopkit/smooth/prolongation.hpp"

#include <cmath>
#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit::smooth {

Vec conditioned_solve(const Mat &J, const Vec &rhs, double limit) {
  Eigen::JacobiSVD<Mat> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto &s = svd.singularValues();
  const double smax = s(0), smin = s(s.size() - 1);
  if (!(smin > 0.0) || smax / smin > limit) {
    std::ostringstream msg;
    msg << "Jacobian is ill-conditioned (condition number "
        << (smin > 0.0 ? smax / smin : INFINITY) << " above " << limit << ")";
    throw NumericError(msg.str());
  }
  return svd.solve(rhs);
}

ProlongedElement prolong_mul(const SmoothLoop &loop, const ProlongedElement &a,
                             const ProlongedElement &b) {
  return {loop.mul(a.base, b.base),
          cocycle_P(loop, a.base, b.base) * a.fiber + cocycle_Q(loop, a.base, b.base) * b.fiber};
}

ProlongedElement prolong_ldiv(const SmoothLoop &loop, const ProlongedElement &a,
                              const ProlongedElement &b, double cond_limit) {
  require_domain(loop, a.base, "left operand");
  require_domain(loop, b.base, "right operand");
  const Vec z = loop.ldiv(a.base, b.base);
  require_domain(loop, z, "quotient");
  const Vec rhs = b.fiber - cocycle_P(loop, a.base, z) * a.fiber;
  return {z, conditioned_solve(cocycle_Q(loop, a.base, z), rhs, cond_limit)};
}

ProlongedElement prolong_rdiv(const SmoothLoop &loop, const ProlongedElement &b,
                              const ProlongedElement &a, double cond_limit) {
  require_domain(loop, a.base, "divisor");
  require_domain(loop, b.base, "dividend");
  const Vec z = loop.rdiv(b.base, a.base);
  require_domain(loop, z, "quotient");
  const Vec rhs = b.fiber - cocycle_Q(loop, z, a.base) * a.fiber;
  return {z, conditioned_solve(cocycle_P(loop, z, a.base), rhs, cond_limit)};
}

ProlongedElement prolong_identity(const SmoothLoop &loop) {
  return {loop.identity(), Vec::Zero(Eigen::Index(loop.dim()))};
}

double distance(const ProlongedElement &a, const ProlongedElement &b) {
  const double db = (a.base - b.base).squaredNorm();
  const double df = (a.fiber - b.fiber).squaredNorm();
  return std::sqrt(db + df);
}

} // namespace loopkit::smooth
