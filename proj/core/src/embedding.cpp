#include "sympsum/embedding.hpp"

#include <cmath>
#include <stdexcept>

#include "sympsum/numfmt.hpp"

namespace sympsum {

namespace {

double radius_checked(const EmbeddingMap& map, const Vec& x) {
  if (x.size() != map.n)
    throw std::invalid_argument("embedding: point dimension " + std::to_string(x.size()) +
                                " does not match map dimension " + std::to_string(map.n));
  const double r = map.oracle.eval(x);
  if (r > map.transfer.a() * (1.0 + 1e-12))
    throw std::domain_error("embedding: radius " + format_shortest(r) +
                            " outside the source domain [0, " +
                            format_shortest(map.transfer.a()) + "]");
  return r;
}

}  // namespace

EmbeddingMap make_psum_embedding(const NormOracle& oracle, Exponent p) {
  const RescaleConstants c = rescale_constants(p);
  TransferFunction f = build_transfer(psum_profile(p, c), unit_profile());
  return {oracle, std::move(f), oracle.dim, 1.0};
}

Vec radial_map(const EmbeddingMap& map, const Vec& x) {
  const double r = radius_checked(map, x);
  if (r < TransferFunction::kNearZero) return map.transfer.derivative_at_zero() * x;
  return (map.transfer.value(r) / r) * x;
}

Mat radial_jacobian(const EmbeddingMap& map, const Vec& x) {
  const double r = radius_checked(map, x);
  if (r < TransferFunction::kNearZero)
    return map.transfer.derivative_at_zero() * Mat::Identity(map.n, map.n);
  const double fp = map.transfer.derivative(r);
  if (!(fp > 0.0))
    throw std::domain_error("radial_jacobian: singular (f'(r) <= 0) at r = " + format_shortest(r));
  const double alpha = map.transfer.value(r) / r;
  return ((fp - alpha) / r) * (x * map.oracle.grad(x).transpose()) +
         alpha * Mat::Identity(map.n, map.n);
}

PhasePoint lift(const EmbeddingMap& map, const PhasePoint& z) {
  if (z.y.size() != z.x.size())
    throw std::invalid_argument("lift: x and y must have equal dimension");
  const double r = radius_checked(map, z.x);
  const double scale = map.momentum_scale;
  if (r < TransferFunction::kNearZero) {
    const double d0 = map.transfer.derivative_at_zero();
    return {d0 * z.x, (scale / d0) * z.y};
  }
  const double fp = map.transfer.derivative(r);
  if (!(fp > 0.0))
    throw std::domain_error("lift: singular (f'(r) <= 0) at r = " + format_shortest(r));
  const double alpha = map.transfer.value(r) / r;

  // Dphi(x)^T = alpha I + grad(x) u^T with u = ((f'(r) - alpha)/r) x; the
  // Sherman-Morrison denominator alpha + <u, grad(x)> equals f'(r) by the
  // Euler identity <grad(x), x> = r.
  const Vec g = map.oracle.grad(z.x);
  const Vec u = ((fp - alpha) / r) * z.x;
  const double denom = alpha + u.dot(g);
  Vec w;
  if (std::abs(denom) < 1e-12) {
    Mat jt = radial_jacobian(map, z.x).transpose();
    Eigen::FullPivLU<Mat> lu(jt);
    if (!lu.isInvertible())
      throw std::domain_error("lift: radial Jacobian is not invertible at r = " +
                              format_shortest(r));
    w = lu.solve(z.y);
  } else {
    w = (z.y - g * (u.dot(z.y) / denom)) / alpha;
  }
  return {alpha * z.x, scale * w};
}

PhasePoint embed_psum(const NormOracle& oracle, Exponent p, const PhasePoint& z) {
  if (p.is_inf())
    throw std::invalid_argument("embed_psum: p = inf needs no embedding (the domain is K x K°)");
  const RescaleConstants c = rescale_constants(p);
  const double gauge = psum_norm(make_psum_domain(oracle, p), z.x, z.y);
  if (!(gauge < c.lambda))
    throw std::domain_error("embed_psum: point with p-sum gauge " + format_shortest(gauge) +
                            " is outside the open domain of scale " + format_shortest(c.lambda));
  return lift(make_psum_embedding(oracle, p), z);
}

}  // namespace sympsum
