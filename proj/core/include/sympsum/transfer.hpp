#pragma once

#include <functional>
#include <string>

#include "sympsum/exponent.hpp"
#include "sympsum/specfun.hpp"

namespace sympsum {

/// A continuous radial profile g : [0, a] -> [0, inf), strictly positive on
/// [0, a). total caches the quadrature value of its integral over [0, a].
struct Profile {
  double a = 0.0;
  std::function<double(double)> g;
  double total = 0.0;
};

/// Build a profile, computing total by adaptive quadrature and validating
/// positivity on a dense grid.
Profile make_profile(double a, std::function<double(double)> g);

/// h == 1 on [0, b].
Profile unit_profile(double b = 1.0);

/// Which normalization constant to use in the p-sum profile.
/// kRescaled gives g(t) = (lambda^p - t^p)^(1/p) on [0, lambda], whose
/// sublevel set {dual(y) <= g(eval(x))} is exactly lambda * (K (+)_p K°)
/// and whose integral is 1, so it pairs with the unit profile.
/// kPrinted uses the constant Gamma(1+2/p)/Gamma(1+1/p)^2 instead of
/// lambda^p; the two agree only at p = 2. It is kept for side-by-side
/// comparison and does not satisfy the equal-integral pairing for p != 2.
enum class PsumProfileConstant { kRescaled, kPrinted };

Profile psum_profile(Exponent p, const RescaleConstants& constants,
                     PsumProfileConstant variant = PsumProfileConstant::kRescaled);

/// t, g(t) table with `rows` uniformly spaced samples, for CLI inspection.
std::string profile_table_csv(const Profile& profile, int rows);

/// Monotone concave transfer f : [0, a] -> [0, b] with f(0) = 0, f(a) = b,
/// f' > 0 on [0, a). Evaluations outside [0, a] throw.
class TransferFunction {
 public:
  TransferFunction(double a, double b, std::function<double(double)> f,
                   std::function<double(double)> fprime, double fprime0, bool concave);

  double a() const { return a_; }
  double b() const { return b_; }
  double value(double t) const;
  double derivative(double t) const;
  double derivative_at_zero() const { return fprime0_; }
  bool concave() const { return concave_; }

  // Radii below this evaluate through the cached f'(0) (removable singularity).
  static constexpr double kNearZero = 1e-8;
  // Arguments within this distance of a snap to the exact endpoint value b.
  static constexpr double kEndpointSnap = 1e-10;

 private:
  double a_, b_, fprime0_;
  bool concave_;
  std::function<double(double)> f_, fprime_;
};

/// The closed-form transfer behind the Euclidean-disc embedding:
/// f(t) = (2/pi) asin(sqrt(pi/4) t) + (t/2) sqrt(4/pi - t^2) on [0, 2/sqrt(pi)],
/// with derivative f'(t) = sqrt(4/pi - t^2).
TransferFunction euclidean_disc_f();

/// Solve the implicit matching of cumulative profiles,
///   integral_0^x g = integral_0^{f(x)} h,
/// for f by adaptive quadrature of g and monotone root finding on the
/// cumulative of h (bisection, then one Newton polish). Requires the two
/// profile totals to agree to 1e-8 relative; throws if the resulting f
/// fails the concavity grid check, reporting the violating t.
TransferFunction build_transfer(const Profile& g, const Profile& h);

}  // namespace sympsum
