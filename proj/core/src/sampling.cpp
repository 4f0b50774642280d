#include "sympsum/sampling.hpp"

#include <stdexcept>

namespace sympsum {

namespace {
constexpr long long kMaxRejections = 10'000'000;
}

Vec axis_extents(const NormOracle& oracle, bool dual) {
  Vec ext(oracle.dim);
  Vec e = Vec::Zero(oracle.dim);
  for (int i = 0; i < oracle.dim; ++i) {
    e[i] = 1.0;
    ext[i] = 1.0 / (dual ? oracle.dual_eval(e) : oracle.eval(e));
    e[i] = 0.0;
  }
  return ext;
}

Vec gaussian_vector(int dim, SampleStream& stream) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = stream.next_gaussian();
  return v;
}

Vec sample_in_norm_ball(const std::function<double(const Vec&)>& norm_eval, const Vec& extents,
                        double radius, SampleStream& stream) {
  const int dim = static_cast<int>(extents.size());
  Vec x(dim);
  for (long long attempt = 0; attempt < kMaxRejections; ++attempt) {
    for (int i = 0; i < dim; ++i) x[i] = stream.next_uniform(-radius * extents[i], radius * extents[i]);
    if (norm_eval(x) < radius) return x;
  }
  throw std::runtime_error("sample_in_norm_ball: acceptance rate below 1e-6, degenerate body");
}

PhasePoint sample_in_psum(const PSumDomain& domain, SampleStream& stream) {
  const double s = domain.scale;
  const Vec ex = axis_extents(domain.oracle, false);
  const Vec ey = axis_extents(domain.oracle, true);
  PhasePoint z{Vec(domain.n), Vec(domain.n)};
  for (long long attempt = 0; attempt < kMaxRejections; ++attempt) {
    for (int i = 0; i < domain.n; ++i) z.x[i] = stream.next_uniform(-s * ex[i], s * ex[i]);
    for (int i = 0; i < domain.n; ++i) z.y[i] = stream.next_uniform(-s * ey[i], s * ey[i]);
    if (psum_norm(domain, z.x, z.y) < s - 1e-12) return z;
  }
  throw std::runtime_error("sample_in_psum: acceptance rate below 1e-6, degenerate domain");
}

Vec sample_on_norm_sphere(const NormOracle& oracle, double radius, SampleStream& stream) {
  if (!(radius > 0.0)) throw std::domain_error("sample_on_norm_sphere: radius must be positive");
  for (;;) {
    Vec d = gaussian_vector(oracle.dim, stream);
    if (d.norm() < 1e-12) continue;  // probability ~0, redraw
    return (radius / oracle.eval(d)) * d;
  }
}

}  // namespace sympsum
