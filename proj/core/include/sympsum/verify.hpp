#pragma once

#include <optional>
#include <string>

#include "sympsum/embedding.hpp"
#include "sympsum/report.hpp"
#include "sympsum/sampling.hpp"
#include "sympsum/specfun.hpp"

namespace sympsum {

/// <Ju, v> with the complex structure J(x, y) = (-y, x).
double j_pairing(const PhasePoint& u, const PhasePoint& v);

struct SymplecticOptions {
  int workers = 1;
  // Multiplies the finite-difference step 1e-6 (1 + |z|_2); used to verify
  // that the residual is discretization error (it must shrink with the step).
  double fd_step_scale = 1.0;
  // Samples stay this close to the middle of the domain: a fraction of the
  // scale away from the boundary and of the axis extent away from coordinate
  // hyperplanes. Both keep the finite-difference stencil inside the region
  // where the lift has bounded third derivatives, so the residual measures
  // the map and not the stencil.
  double interior_margin = 0.10;
  double axis_margin = 0.02;
};

/// Finite-difference Jacobian M of the lift at random interior points;
/// residual |M^T Omega M - Omega|_F must stay below 1e-6.
VerificationReport check_symplectic(const EmbeddingMap& map, const PSumDomain& domain,
                                    long long samples, SampleStream stream,
                                    const SymplecticOptions& opts = {});

struct ContainmentOptions {
  int workers = 1;
  // Inflating the source past 1 is the negative control: points beyond the
  // embeddable region must produce violations.
  double inflate = 1.0;
};

/// Counts image points that leave K x K°. PASS requires zero violations.
VerificationReport check_containment(const EmbeddingMap& map, const PSumDomain& source,
                                     long long samples, SampleStream stream,
                                     const ContainmentOptions& opts = {});

/// Monte Carlo estimate of Vol(K (+)_p K°) / Vol(K x K°) against the Gamma
/// formula, by per-factor rejection sampling of K x K°. 3-sigma acceptance.
VerificationReport mc_volume(const PSumDomain& domain, long long samples, SampleStream stream,
                             int workers = 1);

/// max |dual_eval(grad(x)) - 1| over random nonzero points; threshold 1e-9.
VerificationReport check_dual_gradient(const NormOracle& oracle, long long samples,
                                       SampleStream stream);

/// Numeric dual of the 2-sum gauge sqrt(eval(x)^2 + dual_eval(y)^2) against
/// the closed form sqrt(dual_eval(x)^2 + eval(y)^2). The ascent is one-sided:
/// the gap must lie in [-1e-9, 1e-5] relative.
VerificationReport check_two_sum_duality(const NormOracle& oracle, long long targets,
                                         SampleStream stream, int restarts = 32);

/// |J|_{T° -> T} for T = K (+)_2 K°: multi-start projected ascent of <Ju, v>
/// over the product of two copies of T° (the unit ball of
/// sqrt(dual_eval(x)^2 + eval(y)^2)), plus the analytic witness
/// u = (grad(u_y), 0), v = (0, u_y) whose pairing is exactly 1.
VerificationReport j_norm(const NormOracle& oracle, int restarts, SampleStream stream);

/// The scalar bounds attached to one (norm, p, n) cell: no estimation, pure
/// arithmetic from the Gamma function.
struct BoundsReport {
  std::string norm_name;
  Exponent p = Exponent(2);
  int n = 1;
  double rho = 0.0;
  double lambda = 0.0;
  double capacity_upper = 0.0;  // cylindrical-capacity bound 4 rho(p)
  double volume_ratio_value = 0.0;
  std::optional<EhzBounds> ehz;        // p = 2 only
  std::optional<double> gromov_width;  // Euclidean-disc case, p >= 2 only

  std::string to_json() const;
  std::string to_text() const;
};

BoundsReport report_bounds(const std::string& norm_name, Exponent p, int n);

}  // namespace sympsum
