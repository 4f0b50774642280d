#pragma once

#include <utility>

#include "sympsum/exponent.hpp"

namespace sympsum {

/// Gamma function for positive real arguments, Lanczos approximation with
/// reflection below 0.5. Relative error below 1e-13 on (0, 50].
double gamma(double a);

/// The pair of constants that rescale a p-sum into its product:
/// rho(p) = Gamma(1+1/p)^2 / Gamma(1+2/p) and lambda(p) = rho(p)^(-1/2).
/// rho is the capacity rescaling factor, lambda the linear scale of the
/// embedded domain. rho * lambda^2 == 1 by construction.
struct RescaleConstants {
  Exponent p;
  double rho;
  double lambda;
};

RescaleConstants rescale_constants(Exponent p);

/// Vol(K (+)_p K°) / Vol(K x K°) = Gamma(n/p+1)^2 / Gamma(2n/p+1).
/// Independent of the norm; equals 1 at p = inf.
double volume_ratio(int n, Exponent p);

/// Upper bound 4*rho(p) on the cylindrical capacity of K (+)_p K°.
double capacity_upper_bound(Exponent p);

struct EhzBounds {
  double lower;  // 2 + 1/n
  double upper;  // pi
};

/// Two-sided bounds on the EHZ capacity of K (+)_2 K° in dimension 2n.
EhzBounds ehz_bounds(int n);

}  // namespace sympsum
